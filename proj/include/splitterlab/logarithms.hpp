#pragma once

// Logarithm tables M -> Z_k, direct logarithms (image a direct factor of
// Z_k), the Kummer-Mills admissibility clauses, the 8k lift, and the
// constructive scan turning a direct logarithm into concrete primes p
// where M splits Z_p.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "splitterlab/factorization.hpp"
#include "splitterlab/search.hpp"
#include "splitterlab/splitting.hpp"
#include "splitterlab/zmod.hpp"

namespace splitterlab {

// A table m |-> Z_k on a multiplier set.  values are stored in the
// domain's (ascending) element order.
struct LogTable {
    MultiplierSet domain;
    u64 k = 1;
    std::vector<u64> values;  // values[i] = f(domain.elements()[i]), in Z_k

    LogTable(MultiplierSet d, u64 kk, std::vector<u64> vals)
        : domain(std::move(d)), k(kk), values(std::move(vals)) {
        if (values.size() != domain.size())
            throw std::invalid_argument("LogTable: one value per domain element required");
        for (u64& v : values) v %= k;
    }

    u64 value_of(i64 m) const {
        const auto& el = domain.elements();
        auto it = std::lower_bound(el.begin(), el.end(), m);
        if (it == el.end() || *it != m)
            throw std::invalid_argument("LogTable: element not in domain");
        return values[size_t(it - el.begin())];
    }
};

// Builds a table from (element, value) pairs in any order.
inline LogTable make_log_table(std::vector<std::pair<i64, u64>> pairs, u64 k) {
    std::vector<i64> dom;
    dom.reserve(pairs.size());
    for (auto& [m, v] : pairs) dom.push_back(m);
    MultiplierSet domain(dom);
    std::vector<u64> values(domain.size());
    for (auto& [m, v] : pairs) {
        const auto& el = domain.elements();
        auto it = std::lower_bound(el.begin(), el.end(), m);
        values[size_t(it - el.begin())] = v % k;
    }
    return LogTable(std::move(domain), k, std::move(values));
}

// The logarithm law: f(xy) = f(x) + f(y) whenever x, y, xy all lie in the
// domain.  Bijectivity is deliberately not required here; a table that is
// additionally a bijection onto Z_k is the paper's "logarithm".
inline bool is_logarithm(const LogTable& t) {
    const auto& el = t.domain.elements();
    for (size_t i = 0; i < el.size(); ++i) {
        for (size_t j = i; j < el.size(); ++j) {
            i64 prod;
            if (__builtin_mul_overflow(el[i], el[j], &prod)) continue;
            if (!t.domain.contains(prod)) continue;
            if (t.value_of(prod) != (t.values[i] + t.values[j]) % t.k) return false;
        }
    }
    return true;
}

inline bool is_injective(const LogTable& t) {
    auto v = t.values;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline bool is_bijective(const LogTable& t) {
    return t.domain.size() == t.k && is_injective(t);
}

// Complement of f(M) inside additive Z_k found by the deterministic
// search; present exactly when t is a direct logarithm.
inline SearchResult<std::vector<u64>> direct_logarithm_complement(
    const LogTable& t, u64 budget = kDefaultNodeBudget) {
    using Result = SearchResult<std::vector<u64>>;
    if (!is_injective(t) || !is_logarithm(t)) return Result::make_none(0);
    return find_complement(t.values, GroupContext::additive(t.k), budget);
}

inline bool is_direct_logarithm(const LogTable& t, u64 budget = kDefaultNodeBudget) {
    auto r = direct_logarithm_complement(t, budget);
    if (r.inconclusive())
        throw std::runtime_error("is_direct_logarithm: complement search exceeded budget");
    return r.found();
}

enum class KMMode { as_stated, strict };

enum class KMCase {
    odd_k,                 // Thm 2.1 (1)
    twice_odd,             // Thm 2.1 (2): k = 2m, m odd
    four_m,                // Thm 2.1 (3): k = 4m
    neg_twice_odd,         // Thm 2.2 (1): -1 in domain, k = 2m, m odd
    neg_four_odd,          // Thm 2.2 (2): -1 in domain, k = 4m, m odd
    neg_eight_m,           // Thm 2.2 (3): -1 in domain, k = 8m
    no_clause,             // no clause of the stated theorems applies
};

struct KMVerdict {
    bool admissible = false;
    KMCase clause = KMCase::no_clause;
    KMMode mode = KMMode::strict;
};

// Kummer-Mills admissibility of an injective logarithm table.  The
// prescribed bases are the table's prime-valued elements plus -1 when
// present (values of composite elements are already forced by the law).
//
// as_stated evaluates the theorems exactly as printed.  strict adds the
// rule the worked examples use: when 8 | k, the value at 2 must be even.
inline KMVerdict km_check(const LogTable& t, KMMode mode = KMMode::strict) {
    if (!is_logarithm(t) || !is_injective(t))
        throw std::invalid_argument("km_check: input is not an injective logarithm table");

    const u64 k = t.k;
    bool has_minus_one = t.domain.contains(-1);
    std::vector<std::pair<u64, u64>> prime_values;  // (p_i, b_i), p_i prime
    for (size_t i = 0; i < t.domain.size(); ++i) {
        i64 m = t.domain.elements()[i];
        if (m > 1 && is_prime(u64(m))) prime_values.push_back({u64(m), t.values[i]});
    }

    auto divides = [](u64 d, u64 x) { return d != 0 && x % d == 0; };
    auto even = [](u64 b) { return b % 2 == 0; };

    KMVerdict v;
    v.mode = mode;

    if (!has_minus_one) {
        if (k % 2 == 1) {
            v.clause = KMCase::odd_k;
            v.admissible = true;
        } else if (k % 4 == 2) {
            v.clause = KMCase::twice_odd;
            u64 m = k / 2;
            bool ok = true;
            std::optional<u64> parity;
            for (auto [p, b] : prime_values) {
                if (!divides(p, m)) continue;
                if (p % 4 == 1 && !even(b)) ok = false;
                if (p % 4 == 3) {
                    if (!parity) parity = b % 2;
                    else if (*parity != b % 2) ok = false;
                }
            }
            v.admissible = ok;
        } else {
            v.clause = KMCase::four_m;
            u64 m = k / 4;
            bool ok = true;
            for (auto [p, b] : prime_values)
                if (divides(p, m) && !even(b)) ok = false;
            v.admissible = ok;
        }
    } else {
        u64 b1 = t.value_of(-1);
        if (k % 2 == 1) {
            v.clause = KMCase::no_clause;  // printed theorem offers no odd-k case
            v.admissible = false;
        } else if (k % 4 == 2) {
            v.clause = KMCase::neg_twice_odd;
            u64 m = k / 2;
            bool ok = (b1 == k / 2);
            for (auto [p, b] : prime_values) {
                if (!divides(p, m)) continue;
                if (p % 4 == 1 && !even(b)) ok = false;
                if (p % 4 == 3 && even(b)) ok = false;
            }
            v.admissible = ok;
        } else if (k % 8 == 4) {
            v.clause = KMCase::neg_four_odd;
            u64 m = k / 4;
            bool ok = (b1 == k / 2);
            for (auto [p, b] : prime_values) {
                if (p % 2 == 1 && divides(p, m) && !even(b)) ok = false;
                if (p == 2 && even(b)) ok = false;  // "b_i is odd for p = 2" as printed
            }
            v.admissible = ok;
        } else {
            v.clause = KMCase::neg_eight_m;
            u64 m = k / 8;
            bool ok = true;
            for (auto [p, b] : prime_values)
                if (divides(p, m) && !even(b)) ok = false;
            v.admissible = ok;
        }
    }

    if (mode == KMMode::strict && v.admissible && k % 8 == 0 && t.domain.contains(2)) {
        if (t.value_of(2) % 2 != 0) v.admissible = false;
    }
    return v;
}

// Same domain, values scaled by `factor` into Z_new_k.
inline LogTable scaled_table(const LogTable& t, u64 factor, u64 new_k) {
    std::vector<u64> vals;
    vals.reserve(t.values.size());
    for (u64 v : t.values) vals.push_back(mul_mod(v % new_k, factor % new_k, new_k));
    return LogTable(t.domain, new_k, std::move(vals));
}

// g(m) = 8 f(m) mod 8k.  Takes a direct logarithm to a direct KM
// logarithm; the lifted complement has the block shape 8B + {0..7}.
inline LogTable lift_8k(const LogTable& t, u64 budget = kDefaultNodeBudget) {
    if (!is_direct_logarithm(t, budget))
        throw std::invalid_argument("lift_8k: input is not a direct logarithm");
    return scaled_table(t, 8, 8 * t.k);
}

// All bijective logarithms [-k1,k2]* -> Z_k, in lexicographic order of
// their value vectors (domain sorted ascending).
inline std::vector<LogTable> enumerate_logarithms(i64 k1, i64 k2, u64 k) {
    MultiplierSet domain = MultiplierSet::interval(k1, k2);
    std::vector<LogTable> out;
    if (domain.size() != k) return out;  // bijectivity is impossible otherwise

    const auto& el = domain.elements();
    const size_t n = el.size();
    // Precompute law triples (i, j, l): el[i]*el[j] = el[l].
    std::vector<std::array<size_t, 3>> triples;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            i64 prod;
            if (__builtin_mul_overflow(el[i], el[j], &prod)) continue;
            auto it = std::lower_bound(el.begin(), el.end(), prod);
            if (it != el.end() && *it == prod)
                triples.push_back({i, j, size_t(it - el.begin())});
        }

    std::vector<u64> vals(n, 0);
    std::vector<char> assigned(n, 0), used(k, 0);
    auto consistent = [&]() {
        for (auto [i, j, l] : triples) {
            if (!assigned[i] || !assigned[j] || !assigned[l]) continue;
            if ((vals[i] + vals[j]) % k != vals[l]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == n) {
            out.push_back(LogTable(domain, k, vals));
            return;
        }
        for (u64 v = 0; v < k; ++v) {
            if (used[v]) continue;
            vals[pos] = v;
            assigned[pos] = 1;
            used[v] = 1;
            if (consistent()) self(self, pos + 1);
            assigned[pos] = 0;
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

namespace detail {

// One prime's worth of the Thm 2.5 scan: try the power maps
// phi(a) = a^((p-1)/k * t'), t' coprime to k ascending; on the first t'
// with phi injective on M and phi(M) a direct factor of the order-k
// subgroup, pull the complement back through phi and certify.
inline std::optional<SplittingCertificate> split_prime_attempt(
    const MultiplierSet& m, u64 k, u64 p, u64 budget) {
    if ((p - 1) % k != 0) return std::nullopt;
    auto images = reduce_multipliers(m, p);
    if (!images) return std::nullopt;

    u64 g = primitive_root(p).value;
    u64 e0 = (p - 1) / k;
    u64 h = pow_mod(g, e0, p);  // generates the order-k subgroup U_k
    std::vector<u64> uk;
    uk.reserve(k);
    {
        u64 x = 1;
        for (u64 i = 0; i < k; ++i) { uk.push_back(x); x = mul_mod(x, h, p); }
    }
    auto uk_ctx = GroupContext::multiplicative(p, uk);

    for (u64 t = 1; t < k || (k == 1 && t == 1); ++t) {
        if (std::gcd(t, k) != 1) continue;
        std::vector<u64> phi_m;
        phi_m.reserve(m.size());
        for (u64 mi : *images) phi_m.push_back(pow_mod(mi, e0 * t % (p - 1), p));
        std::vector<u64> uniq(phi_m);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (uniq.size() != m.size()) continue;  // phi not injective on M

        auto comp = find_complement(uniq, uk_ctx, budget);
        if (!comp.found()) continue;

        // Discrete logs inside U_k relative to h_t = g^(e0 t).
        u64 ht = pow_mod(g, e0 * t % (p - 1), p);
        std::map<u64, u64> dl;
        {
            u64 x = 1;
            for (u64 i = 0; i < k; ++i) { dl[x] = i; x = mul_mod(x, ht, p); }
        }
        // Kernel of phi = the k-th powers, enumerated as <g^k>.
        u64 gk = pow_mod(g, k, p);
        std::vector<u64> kernel;
        kernel.reserve((p - 1) / k);
        {
            u64 x = 1;
            for (u64 i = 0; i < (p - 1) / k; ++i) { kernel.push_back(x); x = mul_mod(x, gk, p); }
        }
        std::vector<u64> b1;
        b1.reserve(comp.value.size() * kernel.size());
        for (u64 b : comp.value) {
            u64 cb = pow_mod(g, dl.at(b), p);
            for (u64 kk : kernel) b1.push_back(mul_mod(cb, kk, p));
        }
        if (!verify_splitting(m, b1, p)) continue;  // belt and braces; proof says it holds
        return make_certificate(m, std::move(b1), p);
    }
    return std::nullopt;
}

}  // namespace detail

// Scan primes p = 1 (mod k) up to `bound` for splittings of M induced by
// the table's codomain, per the constructive reading of Thm 2.5.  Emits at
// most `limit` certificates (0 = unlimited), ascending in p regardless of
// the number of worker threads.
inline std::vector<SplittingCertificate> find_split_primes(
    const LogTable& t, u64 bound, u64 limit = 0, unsigned jobs = 1,
    u64 budget = kDefaultNodeBudget) {
    if (!is_direct_logarithm(t, budget))
        throw std::invalid_argument("find_split_primes: seed is not a direct logarithm");
    const u64 k = t.k;
    const MultiplierSet& m = t.domain;

    std::vector<u64> candidates;  // p = 1 + j*k, prime, ascending
    for (u64 p = k + 1; p <= bound; p += k)
        if (is_prime(p)) candidates.push_back(p);

    std::vector<SplittingCertificate> results;
    if (jobs <= 1) {
        for (u64 p : candidates) {
            auto cert = detail::split_prime_attempt(m, k, p, budget);
            if (cert) {
                results.push_back(std::move(*cert));
                if (limit && results.size() >= limit) break;
            }
        }
        return results;
    }

    // Wave-parallel over chunks of the candidate list; each wave completes
    // before the limit is applied, so output is independent of `jobs`.
    const size_t chunk = 64;
    size_t next = 0;
    while (next < candidates.size()) {
        size_t wave_end = std::min(candidates.size(), next + chunk * jobs);
        std::vector<std::vector<SplittingCertificate>> partial(jobs);
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            size_t lo = next + w * chunk;
            size_t hi = std::min(wave_end, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi, w] {
                for (size_t i = lo; i < hi; ++i) {
                    auto cert = detail::split_prime_attempt(m, k, candidates[i], budget);
                    if (cert) partial[w].push_back(std::move(*cert));
                }
            });
        }
        for (auto& th : workers) th.join();
        for (auto& vec : partial)
            for (auto& c : vec) results.push_back(std::move(c));
        next = wave_end;
        if (limit && results.size() >= limit) break;
    }
    std::sort(results.begin(), results.end(),
              [](const auto& a, const auto& b) { return a.modulus < b.modulus; });
    if (limit && results.size() > limit) results.resize(limit);
    return results;
}

// Thm 2.6 pipeline: a verified splitting of Z_q yields the index-map
// direct logarithm M -> Z_{q-1}, which is lifted to Z_{8(q-1)} and fed to
// the prime scan.
inline LogTable index_logarithm(const MultiplierSet& m, u64 q) {
    auto base = find_splitter(m, q);
    if (!base.found())
        throw std::invalid_argument("bootstrap: M does not split Z_q");
    u64 g = primitive_root(q).value;
    Residue gr(i64(g), q);
    std::vector<u64> vals;
    vals.reserve(m.size());
    for (i64 x : m.elements()) vals.push_back(index(gr, Residue(x, q)));
    return LogTable(m, q - 1, std::move(vals));
}

inline std::vector<SplittingCertificate> bootstrap_from_prime(
    const MultiplierSet& m, u64 q, u64 bound, u64 limit = 0, unsigned jobs = 1,
    u64 budget = kDefaultNodeBudget) {
    LogTable lifted = lift_8k(index_logarithm(m, q), budget);
    return find_split_primes(lifted, bound, limit, jobs, budget);
}

}  // namespace splitterlab
