#include "dsrg/numtheory.hpp"

#include <algorithm>
#include <cmath>

namespace dsrg {

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t m = out.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < m; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n))
        r -= r / p;
    return r;
}

int mobius(i64 n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

bool is_prime(i64 n) {
    if (n < 2)
        return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

std::optional<std::pair<i64, int>> prime_power(i64 n) {
    if (n < 2)
        return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1)
        return std::nullopt;
    return f[0];
}

i64 isqrt(i64 n) {
    if (n < 0)
        return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

i64 ipow(i64 p, int e) {
    i64 r = 1;
    while (e-- > 0)
        r *= p;
    return r;
}

} // namespace dsrg
