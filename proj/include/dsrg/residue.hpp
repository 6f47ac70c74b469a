#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/numtheory.hpp"

namespace dsrg {

/// Hard ceiling on the modulus for dense multiset storage.
inline constexpr i64 kDefaultModulusCap = i64{1} << 20;

/// Multiset over Z_n stored as a dense multiplicity vector:
/// counts[i] = number of copies of residue i. Values are immutable by
/// convention; every operation returns a fresh value.
struct ZnMultiset {
    i64 n = 1;
    std::vector<i64> counts;

    ZnMultiset() : counts(1, 0) {}
    explicit ZnMultiset(i64 modulus);

    static ZnMultiset empty(i64 n) { return ZnMultiset(n); }
    /// Plain set from elements (reduced mod n); repeated elements accumulate.
    static ZnMultiset from_elements(i64 n, const std::vector<i64>& elems);
    static ZnMultiset singleton(i64 n, i64 z);
    /// Indicator of the subgroup rZ_n (requires r | n).
    static ZnMultiset subgroup(i64 n, i64 r);
    static ZnMultiset full(i64 n);
    /// Plain set from a bitmask (bit i set <=> i in the set); n <= 64.
    static ZnMultiset from_mask(i64 n, std::uint64_t mask);

    i64 at(i64 z) const { return counts[mod_floor(z, n)]; }
    bool contains(i64 z) const { return at(z) > 0; }
    i64 total() const;
    i64 support_size() const;
    bool is_plain_set() const;
    bool is_empty() const { return total() == 0; }

    /// Sorted element list with repetition, e.g. {1,1,2,3}.
    std::vector<i64> elements() const;
    /// Bitmask of the support; requires n <= 64 and plain-set counts.
    std::uint64_t to_mask() const;
    /// "1,1,2,3" (empty string for the empty multiset).
    std::string to_string() const;

    bool operator==(const ZnMultiset&) const = default;
};

/// Union of multisets: multiplicities add pointwise.
ZnMultiset uplus(const ZnMultiset& a, const ZnMultiset& b);

/// m copies of every element.
ZnMultiset scalar_mul(i64 m, const ZnMultiset& a);

/// Truncated difference: max(count_a - count_b, 0) pointwise.
ZnMultiset msdiff(const ZnMultiset& a, const ZnMultiset& b);

/// Sumset with multiplicity: cyclic convolution of the count vectors.
ZnMultiset mssum(const ZnMultiset& a, const ZnMultiset& b);

/// { -a : a in A }.
ZnMultiset negate(const ZnMultiset& a);

/// { i + a : a in A }.
ZnMultiset translate(i64 i, const ZnMultiset& a);

/// { c * a : a in A }; multiplicities accumulate when c is not a unit.
ZnMultiset dilate(i64 c, const ZnMultiset& a);

/// dilate restricted to units of Z_n, as used by isomorphism transforms.
ZnMultiset dilate_unit(i64 c, const ZnMultiset& a);

/// The Z_n^*-orbit of elements of additive order r: { c*(n/r) : gcd(c,r)=1 }.
struct Orbit {
    i64 n = 1;
    i64 r = 1;
    std::vector<i64> elements;

    ZnMultiset indicator() const;
};

Orbit orbit(i64 n, i64 r);
std::vector<Orbit> all_orbits(i64 n);

/// Largest e <= alpha with p^e dividing z; alpha for z = 0.
int padic_order(i64 p, int alpha, i64 z);

/// Canonical reduction Z_n -> Z_v (requires v | n).
i64 mod_project(i64 n, i64 v, i64 z);

/// Pushforward of a multiset along the reduction map.
ZnMultiset mod_project_ms(i64 n, i64 v, const ZnMultiset& a);

/// Preimage under the reduction map: H + vZ_n, multiplicities inherited.
ZnMultiset mod_preimage(i64 n, i64 v, const ZnMultiset& h);

/// The embedding Z_v -> (n/v)Z_n, z -> (n/v)z.
i64 subgroup_embed(i64 n, i64 v, i64 z);

} // namespace dsrg
