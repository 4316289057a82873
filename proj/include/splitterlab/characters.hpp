#pragma once

// k-characters on Z_p^* (homomorphisms into Z_k), prime scans for
// prescribed character values, k-radius primes, and the kernel-based
// splitter constructions of Prop 2.8.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "splitterlab/splitting.hpp"
#include "splitterlab/zmod.hpp"

namespace splitterlab {

// Prescribed values b_i in Z_k at integer bases (small primes and -1).
// Root-of-unity targets are encoded as exponents: e^{2 pi i b / k} <-> b.
struct CharacterSpec {
    u64 k = 1;
    std::vector<i64> bases;
    std::vector<u64> targets;

    CharacterSpec(u64 kk, std::vector<i64> b, std::vector<u64> t)
        : k(kk), bases(std::move(b)), targets(std::move(t)) {
        if (bases.size() != targets.size())
            throw std::invalid_argument("CharacterSpec: one target per base required");
        for (size_t i = 0; i < bases.size(); ++i) {
            if (bases[i] == 0) throw std::invalid_argument("CharacterSpec: zero base");
            for (size_t j = i + 1; j < bases.size(); ++j)
                if (bases[i] == bases[j])
                    throw std::invalid_argument("CharacterSpec: duplicate base");
        }
        for (u64& t2 : targets) t2 %= k;
    }
};

// chi(a) = x * ind_g(a) mod k, pinned to the smallest primitive root g.
struct CharacterDescriptor {
    u64 p = 2;
    u64 k = 1;
    u64 g = 1;  // primitive root used for indexing
    u64 x = 0;  // image of g in Z_k

    u64 chi(u64 a) const {
        Residue gr(i64(g), p);
        return mul_mod(x % k, index(gr, Residue(i64(a % p), p)) % k, k);
    }
};

// All homomorphisms Z_p^* -> Z_k: x must satisfy (p-1) x = 0 (mod k), so
// x ranges over the multiples of k / gcd(p-1, k).
inline std::vector<CharacterDescriptor> homomorphisms(u64 p, u64 k) {
    if (!is_prime(p)) throw std::invalid_argument("homomorphisms: p not prime");
    u64 g = primitive_root(p).value;
    u64 d = std::gcd(p - 1, k);
    std::vector<CharacterDescriptor> out;
    out.reserve(d);
    for (u64 j = 0; j < d; ++j) out.push_back({p, k, g, j * (k / d)});
    return out;
}

// First homomorphism (ascending x) hitting every prescribed value, if any.
inline std::optional<CharacterDescriptor> character_matches(u64 p, const CharacterSpec& spec) {
    if (!is_prime(p)) throw std::invalid_argument("character_matches: p not prime");
    std::vector<u64> reduced;
    reduced.reserve(spec.bases.size());
    for (i64 b : spec.bases) {
        u64 r = canonical_mod(b, p);
        if (r == 0) throw std::invalid_argument("character_matches: base divisible by p");
        reduced.push_back(r);
    }
    u64 g = primitive_root(p).value;
    Residue gr(i64(g), p);
    std::vector<u64> inds;
    inds.reserve(reduced.size());
    for (u64 r : reduced) inds.push_back(index(gr, Residue(i64(r), p)));

    u64 d = std::gcd(p - 1, spec.k);
    for (u64 j = 0; j < d; ++j) {
        u64 x = j * (spec.k / d);
        bool ok = true;
        for (size_t i = 0; i < inds.size(); ++i) {
            if (mul_mod(x, inds[i] % spec.k, spec.k) != spec.targets[i]) { ok = false; break; }
        }
        if (ok) return CharacterDescriptor{p, spec.k, g, x};
    }
    return std::nullopt;
}

// Primes p = 1 (mod k) in [lo, hi] admitting a matching character.  At
// most `limit` results (0 = unlimited); ascending and independent of the
// worker count.
inline std::vector<u64> scan_primes_for_spec(const CharacterSpec& spec, u64 lo, u64 hi,
                                             u64 limit = 0, unsigned jobs = 1) {
    u64 k = spec.k;
    u64 start = lo <= k + 1 ? k + 1 : lo + (k - (lo - 1) % k) % k;
    std::vector<u64> candidates;
    for (u64 p = start; p <= hi; p += k)
        if ((p - 1) % k == 0 && is_prime(p)) candidates.push_back(p);

    auto test = [&](u64 p) {
        bool base_ok = true;
        for (i64 b : spec.bases)
            if (canonical_mod(b, p) == 0) { base_ok = false; break; }
        return base_ok && character_matches(p, spec).has_value();
    };

    std::vector<u64> hits;
    if (jobs <= 1) {
        for (u64 p : candidates) {
            if (test(p)) {
                hits.push_back(p);
                if (limit && hits.size() >= limit) break;
            }
        }
        return hits;
    }

    const size_t chunk = 256;
    size_t next = 0;
    while (next < candidates.size()) {
        size_t wave_end = std::min(candidates.size(), next + chunk * jobs);
        std::vector<std::vector<u64>> partial(jobs);
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            size_t wlo = next + w * chunk;
            size_t whi = std::min(wave_end, wlo + chunk);
            if (wlo >= whi) break;
            workers.emplace_back([&, wlo, whi, w] {
                for (size_t i = wlo; i < whi; ++i)
                    if (test(candidates[i])) partial[w].push_back(candidates[i]);
            });
        }
        for (auto& th : workers) th.join();
        for (auto& vec : partial) hits.insert(hits.end(), vec.begin(), vec.end());
        next = wave_end;
        if (limit && hits.size() >= limit) break;
    }
    std::sort(hits.begin(), hits.end());
    if (limit && hits.size() > limit) hits.resize(limit);
    return hits;
}

// The two k-radius conditions: p = 1 (mod 2k), and the k powers
// i^((p-1)/k) for i in [1, k] pairwise distinct.
struct RadiusReport {
    u64 p = 2;
    u64 k = 1;
    std::vector<u64> powers;  // empty when k does not divide p-1
    bool distinct = false;
    bool congruent = false;  // p = 1 (mod 2k)

    bool is_radius() const { return congruent && distinct; }
};

inline RadiusReport is_k_radius_prime(u64 p, u64 k) {
    if (!is_prime(p)) throw std::invalid_argument("is_k_radius_prime: p not prime");
    RadiusReport r;
    r.p = p;
    r.k = k;
    r.congruent = (p % (2 * k) == 1);
    if ((p - 1) % k != 0) return r;
    u64 e = (p - 1) / k;
    r.powers.reserve(k);
    for (u64 i = 1; i <= k; ++i) r.powers.push_back(pow_mod(i % p, e, p));
    std::vector<u64> sorted(r.powers);
    std::sort(sorted.begin(), sorted.end());
    r.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return r;
}

// Kernel of the power map a -> a^((p-1)/k), i.e. the k-th powers <g^k>.
inline std::vector<u64> power_map_kernel(u64 p, u64 k) {
    u64 g = primitive_root(p).value;
    u64 gk = pow_mod(g, k, p);
    std::vector<u64> kernel;
    kernel.reserve((p - 1) / k);
    u64 x = 1;
    for (u64 i = 0; i < (p - 1) / k; ++i) {
        kernel.push_back(x);
        x = mul_mod(x, gk, p);
    }
    std::sort(kernel.begin(), kernel.end());
    return kernel;
}

// Prop 2.8 at a k-radius prime: the kernel certifies [1,k]; one
// representative per {b, -b} pair inside the kernel certifies [-k,k]*.
// Both certificates are verified before being returned.
inline std::pair<SplittingCertificate, SplittingCertificate> radius_prime_splitting(u64 p, u64 k) {
    if (!is_k_radius_prime(p, k).is_radius())
        throw std::invalid_argument("radius_prime_splitting: p is not a k-radius prime");
    auto kernel = power_map_kernel(p, k);

    MultiplierSet m1 = MultiplierSet::interval(0, i64(k));
    if (!verify_splitting(m1, kernel, p))
        throw std::logic_error("radius_prime_splitting: [1,k] kernel certificate failed");

    std::vector<u64> s2;
    for (u64 b : kernel)
        if (b <= p - b) s2.push_back(b);  // min of each {b, p-b} pair
    MultiplierSet m2 = MultiplierSet::interval(i64(k), i64(k));
    if (!verify_splitting(m2, s2, p))
        throw std::logic_error("radius_prime_splitting: [-k,k]* certificate failed");

    return {make_certificate(m1, kernel, p), make_certificate(m2, std::move(s2), p)};
}

// B = kernel of a -> a^((p-1)/k); a certificate is returned exactly when
// that B verifies as a splitter set for M.
inline std::optional<SplittingCertificate> kernel_splitter(u64 p, u64 k, const MultiplierSet& m) {
    if (!is_prime(p) || (p - 1) % k != 0)
        throw std::invalid_argument("kernel_splitter: need p prime with k | p-1");
    auto kernel = power_map_kernel(p, k);
    if (!verify_splitting(m, kernel, p)) return std::nullopt;
    return make_certificate(m, std::move(kernel), p);
}

}  // namespace splitterlab
