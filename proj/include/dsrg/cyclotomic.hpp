#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsrg/residue.hpp"

namespace dsrg {

/// Element of Z[zeta_n] represented as an integer polynomial in zeta_n of
/// degree < n (working modulo x^n - 1). Equality is decided by canonical
/// reduction modulo the n-th cyclotomic polynomial, performed lazily.
struct CycInt {
    i64 n = 1;
    std::vector<i64> coeffs;

    CycInt() : coeffs(1, 0) {}
    explicit CycInt(i64 conductor) : n(conductor), coeffs(conductor, 0) {}

    static CycInt zero(i64 n) { return CycInt(n); }
    static CycInt integer(i64 n, i64 value);
    /// zeta_n^k.
    static CycInt root_power(i64 n, i64 k);
};

CycInt cyc_add(const CycInt& f, const CycInt& g);
CycInt cyc_sub(const CycInt& f, const CycInt& g);
CycInt cyc_mul(const CycInt& f, const CycInt& g);
CycInt cyc_scale(i64 m, const CycInt& f);

/// Complex conjugation: zeta^i -> zeta^(n-i).
CycInt conjugate(const CycInt& f);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^n - 1 by the lower-order factors; cached.
std::vector<i64> cyclotomic_poly(i64 n);

/// Canonical form: remainder modulo the n-th cyclotomic polynomial, padded
/// to length phi(n).
std::vector<i64> canonical_coeffs(const CycInt& f);

bool cyc_equal(const CycInt& f, const CycInt& g);
bool cyc_is_zero(const CycInt& f);

/// The integer value when the canonical form is constant, empty otherwise.
std::optional<i64> as_integer(const CycInt& f);

/// "c0,c1,..." over the canonical coefficients (length phi(n)).
std::string cyc_to_string(const CycInt& f);

/// All Fourier transform values of a multiset over Z_n, exact.
struct Spectrum {
    i64 n = 1;
    std::vector<CycInt> values;

    const CycInt& at(i64 z) const { return values[mod_floor(z, n)]; }
};

/// (F f)(z) = sum_i f(i) zeta_n^(iz).
CycInt fourier_at(const ZnMultiset& f, i64 z);
Spectrum fourier(const ZnMultiset& f);

/// Transform of signed coefficient data (group-ring elements).
CycInt fourier_at_signed(i64 n, const std::vector<i64>& coeffs, i64 z);

/// Closed form for the transform of an orbit indicator:
/// mobius(r/gcd(r,z)) * phi(r) / phi(r/gcd(r,z)). Requires r | n.
i64 ramanujan(i64 n, i64 r, i64 z);

/// Fourier transform computed in the quotient ring Z_v (v | n), applied to a
/// multiset over Z_v. Satisfies, for every z in Z_v,
///   fourier_at(mod_preimage(n, v, H), subgroup_embed(n, v, z))
///     = (n/v) * quotient_fourier_at(n, v, H, z),
/// the factor n/v sitting on the lifted side; the placement is pinned by the
/// z = 0 mass count and verified in the test suite.
CycInt quotient_fourier_at(i64 n, i64 v, const ZnMultiset& h, i64 z);

} // namespace dsrg
