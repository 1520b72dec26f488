#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace sublat {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<int, int>> factorize(int n) {
    std::vector<std::pair<int, int>> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline int divisor_count(int n) {
    int c = 1;
    for (auto [p, e] : factorize(n)) c *= e + 1;
    return c;
}

inline long pow_int(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline int pow_mod(long b, long e, int m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<int>(r);
}

/// Multiplicative order of k modulo n; requires gcd(k, n) = 1.
inline int multiplicative_order(int k, int n) {
    int x = k % n, ord = 1;
    while (x != 1 % n) {
        x = static_cast<int>(static_cast<long>(x) * k % n);
        ++ord;
    }
    return ord;
}

/// Largest power of p dividing n, returned as (p^e, e).
inline std::pair<int, int> p_part(int n, int p) {
    int pe = 1, e = 0;
    while (n % p == 0) { n /= p; pe *= p; ++e; }
    return {pe, e};
}

}  // namespace sublat
