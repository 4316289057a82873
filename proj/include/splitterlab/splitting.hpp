#pragma once

// Splittings of cyclic groups: G \ {0} = M*S with every nonzero element a
// unique product m*s.  Verification, deterministic exhaustive search with
// budgets, the Hickerson per-prime reduction, and the parity guard.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitterlab/search.hpp"
#include "splitterlab/zmod.hpp"

namespace splitterlab {

// Finite sorted set of nonzero integers.  Interval sets [-k1,k2]* (all of
// -k1..k2 except 0) are recognized and remember their endpoints.
class MultiplierSet {
  public:
    explicit MultiplierSet(std::vector<i64> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        if (elements_.empty()) throw std::invalid_argument("MultiplierSet: empty");
        for (i64 m : elements_)
            if (m == 0) throw std::invalid_argument("MultiplierSet: zero not allowed");
        detect_interval();
    }

    // [-k1, k2]* with k1 >= 0, k2 >= 1.
    static MultiplierSet interval(i64 k1, i64 k2) {
        if (k1 < 0 || k2 < 1) throw std::invalid_argument("MultiplierSet: bad interval");
        std::vector<i64> v;
        for (i64 m = -k1; m <= k2; ++m)
            if (m != 0) v.push_back(m);
        return MultiplierSet(std::move(v));
    }

    const std::vector<i64>& elements() const { return elements_; }
    size_t size() const { return elements_.size(); }
    bool contains(i64 m) const {
        return std::binary_search(elements_.begin(), elements_.end(), m);
    }
    std::optional<std::pair<i64, i64>> interval_form() const { return interval_; }

    bool operator==(const MultiplierSet&) const = default;

  private:
    void detect_interval() {
        i64 k1 = elements_.front() < 0 ? -elements_.front() : 0;
        i64 k2 = elements_.back();
        if (k2 < 1) return;
        size_t expect = size_t(k1 + k2);
        if (elements_.size() != expect) return;
        for (i64 m = -k1; m <= k2; ++m)
            if (m != 0 && !contains(m)) return;
        interval_ = {{k1, k2}};
    }

    std::vector<i64> elements_;
    std::optional<std::pair<i64, i64>> interval_;
};

// "a..b" expands to [a,b]*; otherwise a comma-separated list.
inline MultiplierSet parse_multipliers(const std::string& text) {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        i64 a = std::stoll(text.substr(0, dots));
        i64 b = std::stoll(text.substr(dots + 2));
        if (a > b) throw std::invalid_argument("parse_multipliers: empty range");
        return MultiplierSet::interval(a < 0 ? -a : 0, b);
    }
    std::vector<i64> v;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        v.push_back(std::stoll(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return MultiplierSet(std::move(v));
}

// A checkable witness that M splits Z_n with splitter set S.
struct SplittingCertificate {
    u64 modulus = 2;
    std::vector<i64> multipliers;   // ascending
    std::vector<u64> splitters;     // ascending residues mod n
    bool nonsingular = false;
};

// Images of M mod n, in M's element order, if pairwise distinct and
// nonzero; empty otherwise (collisions or vanishing make splitting
// impossible).
inline std::optional<std::vector<u64>> reduce_multipliers(const MultiplierSet& m, u64 n) {
    if (n < 2) throw std::invalid_argument("reduce_multipliers: modulus must be >= 2");
    std::vector<u64> images;
    images.reserve(m.size());
    for (i64 x : m.elements()) {
        u64 r = canonical_mod(x, n);
        if (r == 0) return std::nullopt;
        images.push_back(r);
    }
    std::vector<u64> sorted(images);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    return images;
}

inline bool is_nonsingular(const MultiplierSet& m, u64 n) {
    for (i64 x : m.elements())
        if (std::gcd(canonical_mod(x, n), n) != 1) return false;
    return true;
}

// True iff {-1,1} lies in M and |M| is odd: then M splits no Z_p at all.
inline bool nonexistence_guard(const MultiplierSet& m) {
    return m.contains(-1) && m.contains(1) && m.size() % 2 == 1;
}

inline bool verify_splitting(const MultiplierSet& m, const std::vector<u64>& s, u64 n) {
    auto images = reduce_multipliers(m, n);
    if (!images) return false;
    if (m.size() * s.size() != n - 1) return false;
    std::vector<char> seen(n, 0);
    for (u64 mi : *images) {
        for (u64 si : s) {
            u64 v = mul_mod(mi, si % n, n);
            if (v == 0 || seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;  // counts match and no collision => exact cover of Z_n\{0}
}

inline SplittingCertificate make_certificate(const MultiplierSet& m, std::vector<u64> s, u64 n) {
    std::sort(s.begin(), s.end());
    SplittingCertificate cert{n, m.elements(), std::move(s), is_nonsingular(m, n)};
    return cert;
}

namespace detail {

// Core exhaustive splitter search.  Covers, at each step, the uncovered
// residue with the fewest fresh blocks M*s (fail-first; ties broken by
// smallest residue), branching over placements in ascending multiplier
// order.  With seed_one set, S is forced to contain 1 (the block M*1 is
// pre-placed), which is how the structure module enumerates normalized
// splitters.  on_solution returns false to stop the enumeration.
inline SearchStatus splitter_search(
    const MultiplierSet& m, u64 n, u64 budget, bool seed_one,
    const std::function<bool(const std::vector<u64>&)>& on_solution, u64& nodes_out) {
    nodes_out = 0;
    auto images_opt = reduce_multipliers(m, n);
    if (!images_opt) return SearchStatus::none;
    if ((n - 1) % m.size() != 0) return SearchStatus::none;
    const auto& images = *images_opt;

    std::vector<char> covered(n, 1);
    for (u64 g = 1; g < n; ++g) covered[g] = 0;

    struct Branch {
        u64 s;
        std::vector<u64> block;
    };

    // For singular multipliers (gcd(m,n) > 1) the equation m*s = g has
    // either no solution or gcd(m,n) of them; all are enumerated.
    auto placements_for = [&](u64 g) {
        std::vector<Branch> out;
        std::vector<u64> cand_s;
        for (u64 mi : images) {
            u64 d = std::gcd(mi, n);
            if (d == 1) {
                cand_s.push_back(mul_mod(inv_mod(mi, n), g, n));
            } else if (g % d == 0) {
                u64 n2 = n / d;
                u64 s0 = mul_mod(inv_mod(mi / d, n2), (g / d) % n2, n2);
                for (u64 j = 0; j < d; ++j) cand_s.push_back(s0 + j * n2);
            }
        }
        std::sort(cand_s.begin(), cand_s.end());
        cand_s.erase(std::unique(cand_s.begin(), cand_s.end()), cand_s.end());
        for (u64 s : cand_s) {
            if (s == 0) continue;
            std::vector<u64> block;
            block.reserve(images.size());
            bool ok = true;
            for (u64 mi : images) {
                u64 v = mul_mod(mi, s, n);
                if (v == 0 || covered[v]) { ok = false; break; }
                block.push_back(v);
            }
            if (!ok) continue;
            std::sort(block.begin(), block.end());
            if (std::adjacent_find(block.begin(), block.end()) != block.end()) continue;
            out.push_back({s, std::move(block)});
        }
        return out;
    };

    std::vector<u64> s_set;
    if (seed_one) {
        for (u64 v : images) {
            if (covered[v]) return SearchStatus::none;
            covered[v] = 1;
        }
        s_set.push_back(1);
    }

    bool exceeded = false;
    bool stopped = false;
    bool any_found = false;

    auto rec = [&](auto&& self) -> void {
        if (exceeded || stopped) return;
        u64 first = 0;
        for (u64 g = 1; g < n; ++g)
            if (!covered[g]) { first = g; break; }
        if (first == 0) {
            any_found = true;
            auto sorted = s_set;
            std::sort(sorted.begin(), sorted.end());
            if (!on_solution(sorted)) stopped = true;
            return;
        }
        std::vector<Branch> best;
        bool have = false;
        for (u64 g = first; g < n; ++g) {
            if (covered[g]) continue;
            auto pl = placements_for(g);
            if (pl.empty()) return;  // dead end
            if (!have || pl.size() < best.size()) {
                best = std::move(pl);
                have = true;
                if (best.size() == 1) break;
            }
        }
        for (auto& br : best) {
            if (++nodes_out > budget) { exceeded = true; return; }
            for (u64 v : br.block) covered[v] = 1;
            s_set.push_back(br.s);
            self(self);
            s_set.pop_back();
            for (u64 v : br.block) covered[v] = 0;
            if (exceeded || stopped) return;
        }
    };

    rec(rec);
    if (any_found) return SearchStatus::found;
    if (exceeded) return SearchStatus::inconclusive;
    return SearchStatus::none;
}

}  // namespace detail

// First splitting certificate found by the deterministic search, or a
// proven none, or inconclusive on budget exhaustion.
inline SearchResult<SplittingCertificate> find_splitter(
    const MultiplierSet& m, u64 n, u64 budget = kDefaultNodeBudget) {
    using Result = SearchResult<SplittingCertificate>;
    std::vector<u64> first;
    u64 nodes = 0;
    auto status = detail::splitter_search(
        m, n, budget, /*seed_one=*/false,
        [&](const std::vector<u64>& s) {
            first = s;
            return false;  // stop at first
        },
        nodes);
    if (status == SearchStatus::found)
        return Result::make_found(make_certificate(m, std::move(first), n), nodes);
    if (status == SearchStatus::inconclusive) return Result::make_inconclusive(nodes);
    return Result::make_none(nodes);
}

// Enumerate every splitter set containing 1 (used by the structure module).
inline SearchResult<std::vector<std::vector<u64>>> enumerate_splitters_with_one(
    const MultiplierSet& m, u64 n, u64 budget = kDefaultNodeBudget) {
    using Result = SearchResult<std::vector<std::vector<u64>>>;
    std::vector<std::vector<u64>> all;
    u64 nodes = 0;
    auto status = detail::splitter_search(
        m, n, budget, /*seed_one=*/true,
        [&](const std::vector<u64>& s) {
            all.push_back(s);
            return true;  // keep going
        },
        nodes);
    if (status == SearchStatus::inconclusive) return Result::make_inconclusive(nodes);
    if (all.empty()) return Result::make_none(nodes);
    std::sort(all.begin(), all.end());
    return Result::make_found(std::move(all), nodes);
}

// Hickerson reduction: a nonsingular M splits Z_n iff it splits Z_p for
// every prime p dividing n.  Definite false beats inconclusive.
inline SearchResult<bool> splits_nonsingularly(const MultiplierSet& m, u64 n,
                                               u64 budget = kDefaultNodeBudget) {
    using Result = SearchResult<bool>;
    if (!is_nonsingular(m, n))
        throw std::invalid_argument("splits_nonsingularly: M is singular mod n");
    bool any_inconclusive = false;
    u64 nodes = 0;
    for (auto [p, e] : factorize(n).factors) {
        auto r = find_splitter(m, p, budget);
        nodes += r.nodes;
        if (r.none()) return Result::make_none(nodes);
        if (r.inconclusive()) any_inconclusive = true;
    }
    if (any_inconclusive) return Result::make_inconclusive(nodes);
    return Result::make_found(true, nodes);
}

// Trivial splittings from the two corollary constructions; certificates
// are verified before being emitted.
inline std::optional<SplittingCertificate> trivial_splitting(const MultiplierSet& m) {
    auto iv = m.interval_form();
    if (!iv) throw std::invalid_argument("trivial_splitting: M not in interval form");
    auto [k1, k2] = *iv;
    u64 p = u64(k1 + k2 + 1);
    if (is_prime(p) && verify_splitting(m, {1}, p))
        return make_certificate(m, {1}, p);
    if (k1 == 0) {
        u64 q = 2 * u64(k2) + 1;  // [1,k] with 2k+1 prime: S = {1, 2k}
        if (is_prime(q) && verify_splitting(m, {1, q - 1}, q))
            return make_certificate(m, {1, q - 1}, q);
    }
    return std::nullopt;
}

}  // namespace splitterlab
