#include "dsrg/residue.hpp"

#include <numeric>
#include <stdexcept>

namespace dsrg {

namespace {

void require_same_modulus(const ZnMultiset& a, const ZnMultiset& b) {
    if (a.n != b.n)
        throw std::invalid_argument("modulus mismatch: " + std::to_string(a.n) +
                                    " vs " + std::to_string(b.n));
}

void require_divisor(i64 n, i64 v, const char* what) {
    if (v <= 0 || n % v != 0)
        throw std::invalid_argument(std::string(what) + " must divide n");
}

} // namespace

ZnMultiset::ZnMultiset(i64 modulus) : n(modulus), counts(modulus, 0) {
    if (modulus <= 0 || modulus > kDefaultModulusCap)
        throw std::invalid_argument("modulus out of range");
}

ZnMultiset ZnMultiset::from_elements(i64 n, const std::vector<i64>& elems) {
    ZnMultiset a(n);
    for (i64 z : elems)
        ++a.counts[mod_floor(z, n)];
    return a;
}

ZnMultiset ZnMultiset::singleton(i64 n, i64 z) {
    ZnMultiset a(n);
    a.counts[mod_floor(z, n)] = 1;
    return a;
}

ZnMultiset ZnMultiset::subgroup(i64 n, i64 r) {
    require_divisor(n, r, "r");
    ZnMultiset a(n);
    for (i64 z = 0; z < n; z += r)
        a.counts[z] = 1;
    return a;
}

ZnMultiset ZnMultiset::full(i64 n) {
    ZnMultiset a(n);
    for (auto& c : a.counts)
        c = 1;
    return a;
}

ZnMultiset ZnMultiset::from_mask(i64 n, std::uint64_t mask) {
    if (n > 64)
        throw std::invalid_argument("mask representation requires n <= 64");
    ZnMultiset a(n);
    for (i64 i = 0; i < n; ++i)
        if (mask >> i & 1)
            a.counts[i] = 1;
    return a;
}

i64 ZnMultiset::total() const {
    return std::accumulate(counts.begin(), counts.end(), i64{0});
}

i64 ZnMultiset::support_size() const {
    i64 s = 0;
    for (i64 c : counts)
        s += c > 0;
    return s;
}

bool ZnMultiset::is_plain_set() const {
    for (i64 c : counts)
        if (c < 0 || c > 1)
            return false;
    return true;
}

std::vector<i64> ZnMultiset::elements() const {
    std::vector<i64> out;
    for (i64 z = 0; z < n; ++z)
        for (i64 k = 0; k < counts[z]; ++k)
            out.push_back(z);
    return out;
}

std::uint64_t ZnMultiset::to_mask() const {
    if (n > 64)
        throw std::invalid_argument("mask representation requires n <= 64");
    std::uint64_t m = 0;
    for (i64 z = 0; z < n; ++z) {
        if (counts[z] > 1)
            throw std::invalid_argument("mask representation requires a plain set");
        if (counts[z] == 1)
            m |= std::uint64_t{1} << z;
    }
    return m;
}

std::string ZnMultiset::to_string() const {
    std::string out;
    for (i64 z = 0; z < n; ++z)
        for (i64 k = 0; k < counts[z]; ++k) {
            if (!out.empty())
                out += ',';
            out += std::to_string(z);
        }
    return out;
}

ZnMultiset uplus(const ZnMultiset& a, const ZnMultiset& b) {
    require_same_modulus(a, b);
    ZnMultiset r = a;
    for (i64 z = 0; z < r.n; ++z)
        r.counts[z] += b.counts[z];
    return r;
}

ZnMultiset scalar_mul(i64 m, const ZnMultiset& a) {
    if (m < 0)
        throw std::invalid_argument("scalar must be non-negative");
    ZnMultiset r = a;
    for (auto& c : r.counts)
        c *= m;
    return r;
}

ZnMultiset msdiff(const ZnMultiset& a, const ZnMultiset& b) {
    require_same_modulus(a, b);
    ZnMultiset r = a;
    for (i64 z = 0; z < r.n; ++z)
        r.counts[z] = std::max<i64>(r.counts[z] - b.counts[z], 0);
    return r;
}

ZnMultiset mssum(const ZnMultiset& a, const ZnMultiset& b) {
    require_same_modulus(a, b);
    ZnMultiset r(a.n);
    for (i64 i = 0; i < a.n; ++i) {
        if (a.counts[i] == 0)
            continue;
        for (i64 j = 0; j < a.n; ++j) {
            if (b.counts[j] == 0)
                continue;
            i64 k = i + j;
            if (k >= a.n)
                k -= a.n;
            r.counts[k] += a.counts[i] * b.counts[j];
        }
    }
    return r;
}

ZnMultiset negate(const ZnMultiset& a) {
    ZnMultiset r(a.n);
    for (i64 z = 0; z < a.n; ++z)
        r.counts[mod_floor(-z, a.n)] = a.counts[z];
    return r;
}

ZnMultiset translate(i64 i, const ZnMultiset& a) {
    ZnMultiset r(a.n);
    for (i64 z = 0; z < a.n; ++z)
        r.counts[mod_floor(z + i, a.n)] = a.counts[z];
    return r;
}

ZnMultiset dilate(i64 c, const ZnMultiset& a) {
    ZnMultiset r(a.n);
    for (i64 z = 0; z < a.n; ++z)
        r.counts[mod_floor(c * z, a.n)] += a.counts[z];
    return r;
}

ZnMultiset dilate_unit(i64 c, const ZnMultiset& a) {
    if (std::gcd(mod_floor(c, a.n), a.n) != 1)
        throw std::invalid_argument("dilation factor must be a unit of Z_n");
    return dilate(c, a);
}

ZnMultiset Orbit::indicator() const {
    ZnMultiset a(n);
    for (i64 z : elements)
        a.counts[z] = 1;
    return a;
}

Orbit orbit(i64 n, i64 r) {
    require_divisor(n, r, "orbit order r");
    Orbit o;
    o.n = n;
    o.r = r;
    i64 step = n / r;
    for (i64 c = 1; c <= r; ++c)
        if (std::gcd(r, c) == 1)
            o.elements.push_back(mod_floor(c * step, n));
    std::sort(o.elements.begin(), o.elements.end());
    return o;
}

std::vector<Orbit> all_orbits(i64 n) {
    std::vector<Orbit> out;
    for (i64 r : divisors(n))
        out.push_back(orbit(n, r));
    return out;
}

int padic_order(i64 p, int alpha, i64 z) {
    i64 n = ipow(p, alpha);
    z = mod_floor(z, n);
    if (z == 0)
        return alpha;
    int e = 0;
    while (z % p == 0) {
        z /= p;
        ++e;
    }
    return e;
}

i64 mod_project(i64 n, i64 v, i64 z) {
    require_divisor(n, v, "v");
    return mod_floor(z, v);
}

ZnMultiset mod_project_ms(i64 n, i64 v, const ZnMultiset& a) {
    require_divisor(n, v, "v");
    if (a.n != n)
        throw std::invalid_argument("multiset modulus differs from n");
    ZnMultiset h(v);
    for (i64 z = 0; z < n; ++z)
        h.counts[z % v] += a.counts[z];
    return h;
}

ZnMultiset mod_preimage(i64 n, i64 v, const ZnMultiset& h) {
    require_divisor(n, v, "v");
    if (h.n != v)
        throw std::invalid_argument("multiset modulus differs from v");
    ZnMultiset a(n);
    for (i64 z = 0; z < n; ++z)
        a.counts[z] = h.counts[z % v];
    return a;
}

i64 subgroup_embed(i64 n, i64 v, i64 z) {
    require_divisor(n, v, "v");
    return mod_floor((n / v) * mod_floor(z, v), n);
}

} // namespace dsrg
