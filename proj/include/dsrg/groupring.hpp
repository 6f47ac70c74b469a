#pragma once

#include <string>
#include <vector>

#include "dsrg/residue.hpp"

namespace dsrg {

/// Element of the integer group ring Z[C_n]: coeffs[i] is the coefficient
/// of x^i, multiplication is cyclic convolution.
struct CnElem {
    i64 n = 1;
    std::vector<i64> coeffs;

    CnElem() : coeffs(1, 0) {}
    explicit CnElem(i64 order) : n(order), coeffs(order, 0) {}

    static CnElem zero(i64 n) { return CnElem(n); }
    static CnElem unit(i64 n);
    static CnElem all_ones(i64 n);
    static CnElem from_multiset(const ZnMultiset& a);
    static CnElem from_set(i64 n, const std::vector<i64>& elems);

    bool operator==(const CnElem&) const = default;
    std::string to_string() const;
};

CnElem cn_add(const CnElem& f, const CnElem& g);
CnElem cn_sub(const CnElem& f, const CnElem& g);
CnElem cn_mul(const CnElem& f, const CnElem& g);
CnElem cn_scale(i64 m, const CnElem& f);

/// x^i -> x^(-i); the image of a set element under group inversion.
CnElem cn_reverse(const CnElem& f);

/// f * reverse(f), the autocorrelation of the coefficient sequence.
CnElem cn_autocorr(const CnElem& f);

/// Element of Z[D_n] with D_n = <x, a | x^n = a^2 = e, a x = x^(-1) a>,
/// written as rot + ref * a with rot, ref in Z[C_n].
struct DnElem {
    i64 n = 1;
    std::vector<i64> rot;
    std::vector<i64> ref;

    DnElem() : rot(1, 0), ref(1, 0) {}
    explicit DnElem(i64 order) : n(order), rot(order, 0), ref(order, 0) {}

    static DnElem zero(i64 n) { return DnElem(n); }
    static DnElem unit(i64 n);
    static DnElem all_ones(i64 n);
    static DnElem from_parts(const CnElem& rot, const CnElem& ref);

    bool operator==(const DnElem&) const = default;
    std::string to_string() const;
};

DnElem dn_add(const DnElem& f, const DnElem& g);
DnElem dn_sub(const DnElem& f, const DnElem& g);
DnElem dn_scale(i64 m, const DnElem& f);

/// (r1 + s1 a)(r2 + s2 a) = (r1 r2 + s1 s2^rev) + (r1 s2 + s1 r2^rev) a.
DnElem dn_mul(const DnElem& f, const DnElem& g);

/// Sum of the connection set x^X u x^Y a in Z[D_n]; X, Y plain sets in Z_n.
DnElem dn_connection(i64 n, const std::vector<i64>& X, const std::vector<i64>& Y);

/// x-bar^X + x-bar^(-X), the group-ring image of X u (-X) with multiplicity.
CnElem symmetrized(i64 n, const std::vector<i64>& X);

/// autocorr(Y-bar) - autocorr(X-bar).
CnElem autocorr_diff(i64 n, const std::vector<i64>& X, const std::vector<i64>& Y);

} // namespace dsrg
