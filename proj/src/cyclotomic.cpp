#include "dsrg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dsrg {

namespace {

void require_same_conductor(const CycInt& f, const CycInt& g) {
    if (f.n != g.n)
        throw std::invalid_argument("conductor mismatch");
}

/// Exact division of integer polynomials, assuming the divisor is monic and
/// the division leaves no remainder. Coefficients are constant-term first.
std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
    int deg_d = static_cast<int>(den.size()) - 1;
    int deg_n = static_cast<int>(num.size()) - 1;
    std::vector<i64> q(deg_n - deg_d + 1, 0);
    for (int k = deg_n - deg_d; k >= 0; --k) {
        i64 c = num[k + deg_d];
        q[k] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= deg_d; ++i)
            num[k + i] -= c * den[i];
    }
    return q;
}

} // namespace

CycInt CycInt::integer(i64 n, i64 value) {
    CycInt f(n);
    f.coeffs[0] = value;
    return f;
}

CycInt CycInt::root_power(i64 n, i64 k) {
    CycInt f(n);
    f.coeffs[mod_floor(k, n)] = 1;
    return f;
}

CycInt cyc_add(const CycInt& f, const CycInt& g) {
    require_same_conductor(f, g);
    CycInt r = f;
    for (i64 i = 0; i < r.n; ++i)
        r.coeffs[i] += g.coeffs[i];
    return r;
}

CycInt cyc_sub(const CycInt& f, const CycInt& g) {
    require_same_conductor(f, g);
    CycInt r = f;
    for (i64 i = 0; i < r.n; ++i)
        r.coeffs[i] -= g.coeffs[i];
    return r;
}

CycInt cyc_mul(const CycInt& f, const CycInt& g) {
    require_same_conductor(f, g);
    CycInt r(f.n);
    for (i64 i = 0; i < f.n; ++i) {
        if (f.coeffs[i] == 0)
            continue;
        for (i64 j = 0; j < f.n; ++j) {
            if (g.coeffs[j] == 0)
                continue;
            i64 k = i + j;
            if (k >= f.n)
                k -= f.n;
            r.coeffs[k] += f.coeffs[i] * g.coeffs[j];
        }
    }
    return r;
}

CycInt cyc_scale(i64 m, const CycInt& f) {
    CycInt r = f;
    for (auto& c : r.coeffs)
        c *= m;
    return r;
}

CycInt conjugate(const CycInt& f) {
    CycInt r(f.n);
    for (i64 i = 0; i < f.n; ++i)
        r.coeffs[mod_floor(-i, f.n)] = f.coeffs[i];
    return r;
}

std::vector<i64> cyclotomic_poly(i64 n) {
    static std::map<i64, std::vector<i64>> cache;
    static std::mutex cache_mutex;
    if (n < 1)
        throw std::invalid_argument("cyclotomic index must be positive");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    // x^n - 1 divided by the product of all lower-order cyclotomic factors.
    std::vector<i64> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    std::vector<i64> result;
    if (n == 1) {
        result = {-1, 1};
    } else {
        std::vector<i64> cur = num;
        for (i64 d : divisors(n))
            if (d < n)
                cur = poly_div_exact(cur, cyclotomic_poly(d));
        result = cur;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, result);
    return result;
}

std::vector<i64> canonical_coeffs(const CycInt& f) {
    auto phi_n = cyclotomic_poly(f.n);
    int deg_d = static_cast<int>(phi_n.size()) - 1;
    std::vector<i64> rem = f.coeffs;
    for (int k = static_cast<int>(rem.size()) - 1; k >= deg_d; --k) {
        i64 c = rem[k];
        if (c == 0)
            continue;
        for (int i = 0; i <= deg_d; ++i)
            rem[k - deg_d + i] -= c * phi_n[i];
    }
    rem.resize(deg_d, 0);
    return rem;
}

bool cyc_is_zero(const CycInt& f) {
    for (i64 c : canonical_coeffs(f))
        if (c != 0)
            return false;
    return true;
}

bool cyc_equal(const CycInt& f, const CycInt& g) {
    require_same_conductor(f, g);
    return cyc_is_zero(cyc_sub(f, g));
}

std::optional<i64> as_integer(const CycInt& f) {
    auto c = canonical_coeffs(f);
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0)
            return std::nullopt;
    return c[0];
}

std::string cyc_to_string(const CycInt& f) {
    std::string out;
    for (i64 c : canonical_coeffs(f)) {
        if (!out.empty())
            out += ',';
        out += std::to_string(c);
    }
    return out;
}

CycInt fourier_at(const ZnMultiset& f, i64 z) {
    CycInt r(f.n);
    z = mod_floor(z, f.n);
    for (i64 i = 0; i < f.n; ++i)
        if (f.counts[i] != 0)
            r.coeffs[mod_floor(i * z, f.n)] += f.counts[i];
    return r;
}

Spectrum fourier(const ZnMultiset& f) {
    Spectrum s;
    s.n = f.n;
    s.values.reserve(f.n);
    for (i64 z = 0; z < f.n; ++z)
        s.values.push_back(fourier_at(f, z));
    return s;
}

CycInt fourier_at_signed(i64 n, const std::vector<i64>& coeffs, i64 z) {
    if (static_cast<i64>(coeffs.size()) != n)
        throw std::invalid_argument("coefficient length differs from n");
    CycInt r(n);
    z = mod_floor(z, n);
    for (i64 i = 0; i < n; ++i)
        if (coeffs[i] != 0)
            r.coeffs[mod_floor(i * z, n)] += coeffs[i];
    return r;
}

i64 ramanujan(i64 n, i64 r, i64 z) {
    if (r <= 0 || n % r != 0)
        throw std::invalid_argument("orbit order r must divide n");
    i64 g = std::gcd(r, mod_floor(z, n));
    i64 q = r / g;
    return mobius(q) * (euler_phi(r) / euler_phi(q));
}

CycInt quotient_fourier_at(i64 n, i64 v, const ZnMultiset& h, i64 z) {
    if (v <= 0 || n % v != 0)
        throw std::invalid_argument("v must divide n");
    if (h.n != v)
        throw std::invalid_argument("multiset modulus differs from v");
    return fourier_at(h, z);
}

} // namespace dsrg
