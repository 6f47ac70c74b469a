#include "dsrg/groupring.hpp"

#include <stdexcept>

namespace dsrg {

namespace {

void require_same_order(i64 a, i64 b) {
    if (a != b)
        throw std::invalid_argument("group order mismatch");
}

std::vector<i64> conv(const std::vector<i64>& a, const std::vector<i64>& b, i64 n) {
    std::vector<i64> r(n, 0);
    for (i64 i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (i64 j = 0; j < n; ++j) {
            if (b[j] == 0)
                continue;
            i64 k = i + j;
            if (k >= n)
                k -= n;
            r[k] += a[i] * b[j];
        }
    }
    return r;
}

std::vector<i64> reverse_indices(const std::vector<i64>& a, i64 n) {
    std::vector<i64> r(n, 0);
    for (i64 i = 0; i < n; ++i)
        r[mod_floor(-i, n)] = a[i];
    return r;
}

std::string coeff_string(const std::vector<i64>& c) {
    std::string out;
    for (i64 x : c) {
        if (!out.empty())
            out += ',';
        out += std::to_string(x);
    }
    return out;
}

} // namespace

CnElem CnElem::unit(i64 n) {
    CnElem f(n);
    f.coeffs[0] = 1;
    return f;
}

CnElem CnElem::all_ones(i64 n) {
    CnElem f(n);
    for (auto& c : f.coeffs)
        c = 1;
    return f;
}

CnElem CnElem::from_multiset(const ZnMultiset& a) {
    CnElem f(a.n);
    f.coeffs = a.counts;
    return f;
}

CnElem CnElem::from_set(i64 n, const std::vector<i64>& elems) {
    CnElem f(n);
    for (i64 z : elems)
        ++f.coeffs[mod_floor(z, n)];
    return f;
}

std::string CnElem::to_string() const { return coeff_string(coeffs); }

CnElem cn_add(const CnElem& f, const CnElem& g) {
    require_same_order(f.n, g.n);
    CnElem r = f;
    for (i64 i = 0; i < r.n; ++i)
        r.coeffs[i] += g.coeffs[i];
    return r;
}

CnElem cn_sub(const CnElem& f, const CnElem& g) {
    require_same_order(f.n, g.n);
    CnElem r = f;
    for (i64 i = 0; i < r.n; ++i)
        r.coeffs[i] -= g.coeffs[i];
    return r;
}

CnElem cn_mul(const CnElem& f, const CnElem& g) {
    require_same_order(f.n, g.n);
    CnElem r(f.n);
    r.coeffs = conv(f.coeffs, g.coeffs, f.n);
    return r;
}

CnElem cn_scale(i64 m, const CnElem& f) {
    CnElem r = f;
    for (auto& c : r.coeffs)
        c *= m;
    return r;
}

CnElem cn_reverse(const CnElem& f) {
    CnElem r(f.n);
    r.coeffs = reverse_indices(f.coeffs, f.n);
    return r;
}

CnElem cn_autocorr(const CnElem& f) { return cn_mul(f, cn_reverse(f)); }

DnElem DnElem::unit(i64 n) {
    DnElem f(n);
    f.rot[0] = 1;
    return f;
}

DnElem DnElem::all_ones(i64 n) {
    DnElem f(n);
    for (auto& c : f.rot)
        c = 1;
    for (auto& c : f.ref)
        c = 1;
    return f;
}

DnElem DnElem::from_parts(const CnElem& rot, const CnElem& ref) {
    require_same_order(rot.n, ref.n);
    DnElem f(rot.n);
    f.rot = rot.coeffs;
    f.ref = ref.coeffs;
    return f;
}

std::string DnElem::to_string() const {
    return coeff_string(rot) + " | " + coeff_string(ref);
}

DnElem dn_add(const DnElem& f, const DnElem& g) {
    require_same_order(f.n, g.n);
    DnElem r = f;
    for (i64 i = 0; i < r.n; ++i) {
        r.rot[i] += g.rot[i];
        r.ref[i] += g.ref[i];
    }
    return r;
}

DnElem dn_sub(const DnElem& f, const DnElem& g) {
    require_same_order(f.n, g.n);
    DnElem r = f;
    for (i64 i = 0; i < r.n; ++i) {
        r.rot[i] -= g.rot[i];
        r.ref[i] -= g.ref[i];
    }
    return r;
}

DnElem dn_scale(i64 m, const DnElem& f) {
    DnElem r = f;
    for (auto& c : r.rot)
        c *= m;
    for (auto& c : r.ref)
        c *= m;
    return r;
}

DnElem dn_mul(const DnElem& f, const DnElem& g) {
    require_same_order(f.n, g.n);
    i64 n = f.n;
    DnElem r(n);
    auto g_rot_rev = reverse_indices(g.rot, n);
    auto g_ref_rev = reverse_indices(g.ref, n);
    auto rr = conv(f.rot, g.rot, n);
    auto ss = conv(f.ref, g_ref_rev, n);
    auto rs = conv(f.rot, g.ref, n);
    auto sr = conv(f.ref, g_rot_rev, n);
    for (i64 i = 0; i < n; ++i) {
        r.rot[i] = rr[i] + ss[i];
        r.ref[i] = rs[i] + sr[i];
    }
    return r;
}

DnElem dn_connection(i64 n, const std::vector<i64>& X, const std::vector<i64>& Y) {
    return DnElem::from_parts(CnElem::from_set(n, X), CnElem::from_set(n, Y));
}

CnElem symmetrized(i64 n, const std::vector<i64>& X) {
    auto x = CnElem::from_set(n, X);
    return cn_add(x, cn_reverse(x));
}

CnElem autocorr_diff(i64 n, const std::vector<i64>& X, const std::vector<i64>& Y) {
    return cn_sub(cn_autocorr(CnElem::from_set(n, Y)),
                  cn_autocorr(CnElem::from_set(n, X)));
}

} // namespace dsrg
