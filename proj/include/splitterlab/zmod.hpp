#pragma once

// Exact modular arithmetic on 64-bit moduli: deterministic primality,
// factorization, primitive roots, discrete logarithms (index), orders.
// Everything here is a pure function; results are exact, never probabilistic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace splitterlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 n) { return u64(u128(a) * b % n); }

inline u64 add_mod(u64 a, u64 b, u64 n) {
    u64 s = a + b;
    if (s < a || s >= n) s -= n;
    return s;
}

inline u64 sub_mod(u64 a, u64 b, u64 n) { return a >= b ? a - b : a + n - b; }

inline u64 pow_mod(u64 a, u64 e, u64 n) {
    u64 r = n > 1 ? 1 : 0;
    a %= n;
    while (e) {
        if (e & 1) r = mul_mod(r, a, n);
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

// Canonical residue of a signed integer in [0, n).
inline u64 canonical_mod(i64 a, u64 n) {
    i64 m = i64(n);
    i64 r = a % m;
    if (r < 0) r += m;
    return u64(r);
}

// Extended gcd: returns g = gcd(a,b) and x with a*x = g (mod b).
inline u64 inv_mod(u64 a, u64 n) {
    i64 t = 0, newt = 1;
    i64 r = i64(n), newr = i64(a % n);
    while (newr != 0) {
        i64 q = r / newr;
        std::tie(t, newt) = std::pair{newt, t - q * newt};
        std::tie(r, newr) = std::pair{newr, r - q * newr};
    }
    if (r != 1) throw std::invalid_argument("inv_mod: argument not a unit");
    return canonical_mod(t, n);
}

// An element of Z_n, canonicalized to [0, n-1] on construction.
struct Residue {
    u64 value = 0;
    u64 modulus = 2;

    Residue() = default;
    Residue(i64 v, u64 n) : value(canonical_mod(v, n)), modulus(n) {
        if (n < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
    }
    bool operator==(const Residue&) const = default;
};

// Deterministic Miller-Rabin, valid for the full 64-bit range.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

struct FactoredInteger {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;  // primes strictly increasing
};

namespace detail {

inline u64 pollard_rho(u64 n) {
    // Brent's cycle variant with a deterministic sequence of offsets.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 saved_x = x;
        int power = 1, lam = 0;
        auto step = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
        while (d == 1) {
            if (lam == power) { saved_x = y; power *= 2; lam = 0; }
            y = step(y);
            ++lam;
            u64 diff = saved_x > y ? saved_x - y : y - saved_x;
            if (diff == 0) break;  // cycle without factor; retry with next c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

inline FactoredInteger factorize(u64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    FactoredInteger f;
    f.n = n;
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    detail::factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second++;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

inline u64 euler_phi(u64 n) {
    u64 phi = 1;
    for (auto [p, e] : factorize(n).factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline u64 order(const Residue& a) {
    u64 n = a.modulus;
    if (std::gcd(a.value, n) != 1)
        throw std::invalid_argument("order: argument not a unit");
    u64 t = euler_phi(n);
    for (auto [p, e] : factorize(t).factors) {
        for (int i = 0; i < e && pow_mod(a.value, t / p, n) == 1; ++i) t /= p;
    }
    return t;
}

// Smallest primitive root modulo an odd prime p.  p = 2 yields 1.
inline Residue primitive_root(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: modulus not prime");
    if (p == 2) return Residue(1, 2);
    auto fac = factorize(p - 1).factors;
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : fac) {
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return Residue(i64(g), p);
    }
    throw std::logic_error("primitive_root: no generator found");
}

// Discrete logarithm threshold: below it a full table is built, above it
// baby-step/giant-step runs.  Both paths return the identical unique answer.
inline constexpr u64 kIndexTableThreshold = u64(1) << 16;

namespace detail {

inline u64 index_table(u64 g, u64 b, u64 p) {
    // One-entry memo for the (g, p) power table: index is pure, and
    // callers overwhelmingly query many b against one base.
    thread_local u64 cached_g = 0, cached_p = 0;
    thread_local std::unordered_map<u64, u64> table;
    if (cached_g != g || cached_p != p) {
        table.clear();
        table.reserve(p);
        u64 x = 1;
        for (u64 i = 0; i < p - 1; ++i) {
            table.emplace(x, i);
            x = mul_mod(x, g, p);
        }
        cached_g = g;
        cached_p = p;
    }
    auto it = table.find(b);
    if (it == table.end())
        throw std::logic_error("index: no logarithm found (base not primitive?)");
    return it->second;
}

inline u64 index_bsgs(u64 g, u64 b, u64 p) {
    u64 m = 1;
    while (m * m < p) ++m;  // ceil(sqrt(p-1)) good enough
    std::unordered_map<u64, u64> baby;
    baby.reserve(m * 2);
    u64 x = 1;
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(x, j);
        x = mul_mod(x, g, p);
    }
    u64 ginv_m = pow_mod(inv_mod(g, p), m, p);
    u64 gamma = b;
    for (u64 i = 0; i <= m; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) {
            u64 l = i * m + it->second;
            return l % (p - 1);
        }
        gamma = mul_mod(gamma, ginv_m, p);
    }
    throw std::logic_error("index: no logarithm found (base not primitive?)");
}

}  // namespace detail

// Index (discrete logarithm) of b relative to base g modulo a prime p:
// the unique l in [0, p-2] with g^l = b.  g must be a primitive root.
inline u64 index(const Residue& g, const Residue& b,
                 u64 table_threshold = kIndexTableThreshold) {
    u64 p = g.modulus;
    if (b.modulus != p) throw std::invalid_argument("index: modulus mismatch");
    if (!is_prime(p)) throw std::invalid_argument("index: modulus not prime");
    if (b.value == 0) throw std::invalid_argument("index: b must be nonzero");
    if (p == 2) return 0;
    thread_local u64 validated_g = 0, validated_p = 0;  // primitivity memo
    if (validated_g != g.value || validated_p != p) {
        if (order(g) != p - 1) throw std::invalid_argument("index: base not a primitive root");
        validated_g = g.value;
        validated_p = p;
    }
    return p <= table_threshold ? detail::index_table(g.value, b.value, p)
                                : detail::index_bsgs(g.value, b.value, p);
}

}  // namespace splitterlab
