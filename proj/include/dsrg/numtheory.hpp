#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace dsrg {

using i64 = std::int64_t;

/// Prime factorisation by trial division, as (prime, exponent) pairs in
/// ascending prime order. factorize(1) is empty.
std::vector<std::pair<i64, int>> factorize(i64 n);

/// All positive divisors of n, ascending.
std::vector<i64> divisors(i64 n);

i64 euler_phi(i64 n);

/// Moebius function: 0 on non-squarefree input, otherwise (-1)^#primes.
int mobius(i64 n);

bool is_prime(i64 n);

/// Writes n as p^a with p prime, a >= 1; empty if n is not a prime power.
std::optional<std::pair<i64, int>> prime_power(i64 n);

/// Floor of the square root, exact for all non-negative n.
i64 isqrt(i64 n);

inline bool is_perfect_square(i64 n) {
    if (n < 0)
        return false;
    i64 r = isqrt(n);
    return r * r == n;
}

/// x mod n mapped into [0, n).
inline i64 mod_floor(i64 x, i64 n) {
    i64 r = x % n;
    return r < 0 ? r + n : r;
}

/// p^e with overflow left to the caller's judgement (inputs stay small here).
i64 ipow(i64 p, int e);

} // namespace dsrg
