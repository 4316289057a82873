#pragma once

// Structure theory for splitter sets of [-1,5]*: the X = M/M ratio
// criterion, reduction to the subgroup H = <-1, 2, ..., k2>, and the two
// B1 coset families with sign vectors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitterlab/factorization.hpp"
#include "splitterlab/search.hpp"
#include "splitterlab/splitting.hpp"
#include "splitterlab/zmod.hpp"

namespace splitterlab {

// Exact reduced fraction with positive denominator.
struct Fraction {
    i64 num = 0;
    i64 den = 1;

    Fraction(i64 n, i64 d) {
        if (d == 0) throw std::invalid_argument("Fraction: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i64 g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }
    bool operator==(const Fraction&) const = default;
    auto operator<=>(const Fraction& o) const {
        // numeric order; magnitudes here are tiny, no overflow concern
        return num * o.den <=> o.num * den;
    }

    u64 residue(u64 p) const {
        u64 d = canonical_mod(den, p);
        if (d == 0) throw std::invalid_argument("Fraction: p divides denominator");
        return mul_mod(canonical_mod(num, p), inv_mod(d, p), p);
    }
};

using RatioSet = std::vector<Fraction>;  // sorted, deduplicated, 1 excluded

// X = M/M \ {1}: all reduced fractions m1/m2 with distinct m1, m2 in M.
inline RatioSet quotient_set(const MultiplierSet& m) {
    if (!m.contains(1)) throw std::invalid_argument("quotient_set: requires 1 in M");
    std::set<Fraction> xs;
    for (i64 m1 : m.elements())
        for (i64 m2 : m.elements())
            if (m1 != m2) xs.insert(Fraction(m1, m2));
    return RatioSet(xs.begin(), xs.end());
}

inline std::vector<u64> instantiate_ratios(const RatioSet& xs, u64 p) {
    std::set<u64> out;
    for (const Fraction& f : xs) out.insert(f.residue(p));
    return std::vector<u64>(out.begin(), out.end());
}

// Lemma 4.1(a): a genuine splitter set B satisfies B and B*X disjoint.
inline bool check_disjoint_criterion(const std::vector<u64>& b, const MultiplierSet& m, u64 p) {
    auto xs = instantiate_ratios(quotient_set(m), p);
    std::set<u64> bset(b.begin(), b.end());
    for (u64 bi : bset)
        for (u64 x : xs)
            if (bset.count(mul_mod(bi, x, p))) return false;
    return true;
}

// Lemma 4.1(b): 1 in B, M*B covers Z_p \ {0}, and B cap B*X empty --
// together equivalent to B being a splitter set.
inline bool criterion_splitting(const std::vector<u64>& b, const MultiplierSet& m, u64 p) {
    if (std::find(b.begin(), b.end(), u64(1)) == b.end())
        throw std::invalid_argument("criterion_splitting: requires 1 in B");
    auto images = reduce_multipliers(m, p);
    if (!images) return false;
    std::vector<char> hit(p, 0);
    for (u64 mi : *images)
        for (u64 bi : b) {
            u64 v = mul_mod(mi, bi % p, p);
            if (v == 0) return false;
            hit[v] = 1;
        }
    for (u64 g = 1; g < p; ++g)
        if (!hit[g]) return false;
    return check_disjoint_criterion(b, m, p);
}

// Closure of {-1, 2, ..., k2} under multiplication mod p.
inline std::vector<u64> subgroup_H(u64 p, i64 k2) {
    if (!is_prime(p) || u64(k2) >= p)
        throw std::invalid_argument("subgroup_H: need p prime, p > k2");
    std::set<u64> h{1};
    std::vector<u64> frontier{1};
    std::vector<u64> gens{p - 1};
    for (i64 g = 2; g <= k2; ++g) gens.push_back(u64(g));
    while (!frontier.empty()) {
        u64 x = frontier.back();
        frontier.pop_back();
        for (u64 g : gens) {
            u64 y = mul_mod(x, g, p);
            if (h.insert(y).second) frontier.push_back(y);
        }
    }
    return std::vector<u64>(h.begin(), h.end());
}

// The two coset families of Thm 4.3.  Variant A is generated by
// {-2/5, -4/3}, variant B by {-4/5, -2/3}; the union runs over the cosets
// eps_j * 8^j * K until 8^d returns to K.
struct B1Config {
    enum class Variant { A, B };
    Variant variant = Variant::A;
    std::vector<int> signs;  // entries +1 / -1, one per coset index
};

inline std::vector<Fraction> b1_generators(B1Config::Variant v) {
    if (v == B1Config::Variant::A) return {Fraction(-2, 5), Fraction(-4, 3)};
    return {Fraction(-4, 5), Fraction(-2, 3)};
}

inline std::vector<u64> closure_of(const std::vector<u64>& gens, u64 p) {
    std::set<u64> k{1};
    std::vector<u64> frontier{1};
    while (!frontier.empty()) {
        u64 x = frontier.back();
        frontier.pop_back();
        for (u64 g : gens) {
            u64 y = mul_mod(x, g, p);
            if (k.insert(y).second) frontier.push_back(y);
        }
    }
    return std::vector<u64>(k.begin(), k.end());
}

// Number of distinct cosets 8^j K before cycling (= order of 8K in the
// quotient), together with the subgroup K itself.
inline std::pair<std::vector<u64>, u64> b1_subgroup_and_cycle(B1Config::Variant v, u64 p) {
    std::vector<u64> gens;
    for (const Fraction& f : b1_generators(v)) gens.push_back(f.residue(p));
    auto k = closure_of(gens, p);
    std::set<u64> kset(k.begin(), k.end());
    u64 d = 1;
    u64 x = canonical_mod(8, p);
    while (!kset.count(x)) {
        x = mul_mod(x, canonical_mod(8, p), p);
        ++d;
    }
    return {k, d};
}

struct B1Result {
    bool sign_conflict = false;
    std::vector<u64> elements;  // sorted; meaningful when no conflict
};

inline B1Result build_B1(u64 p, const B1Config& cfg) {
    if (p % 6 != 1) throw std::invalid_argument("build_B1: requires p = 1 (mod 6)");
    auto [k, d] = b1_subgroup_and_cycle(cfg.variant, p);
    if (cfg.signs.size() != d)
        throw std::invalid_argument("build_B1: sign vector length must equal the coset cycle " +
                                    std::to_string(d));
    std::set<u64> out;
    u64 pw = 1;
    for (u64 j = 0; j < d; ++j) {
        int eps = cfg.signs[j];
        if (eps != 1 && eps != -1) throw std::invalid_argument("build_B1: signs must be +1/-1");
        for (u64 kk : k) {
            u64 v = mul_mod(pw, kk, p);
            if (eps == -1) v = (p - v) % p;
            if (!out.insert(v).second) return {true, {}};  // coset collision
        }
        pw = mul_mod(pw, canonical_mod(8, p), p);
    }
    return {false, std::vector<u64>(out.begin(), out.end())};
}

// Does b1 equal some union of signed cosets eps_j 8^j K?  Returns the
// unique sign vector when it does.
inline std::optional<std::vector<int>> match_b1_family(const std::vector<u64>& b1,
                                                       B1Config::Variant v, u64 p) {
    auto [k, d] = b1_subgroup_and_cycle(v, p);
    if (b1.size() != d * k.size()) return std::nullopt;
    std::set<u64> bset(b1.begin(), b1.end());
    std::vector<int> signs;
    signs.reserve(d);
    u64 pw = 1;
    for (u64 j = 0; j < d; ++j) {
        bool plus = true, minus = true;
        for (u64 kk : k) {
            u64 v1 = mul_mod(pw, kk, p);
            if (!bset.count(v1)) plus = false;
            if (!bset.count((p - v1) % p)) minus = false;
            if (!plus && !minus) return std::nullopt;
        }
        signs.push_back(plus ? 1 : -1);  // when both, the cosets coincide (-1 in K)
        pw = mul_mod(pw, canonical_mod(8, p), p);
    }
    return signs;
}

struct StructureReport {
    u64 p = 7;
    u64 splitters_found = 0;
    std::string family;       // "A", "B", "both", or "none"
    std::vector<int> signs;   // from the first enumerated splitter
    bool forced_ratio_ok = true;   // -2/3 or -2/5 in B, for every splitter
    bool forced_eight_ok = true;   // 8 or -8 in B, for every splitter
    bool all_in_family = true;     // every B cap H matched family A or B
};

// Enumerates every splitter set B with 1 in B for [-1,5]* mod p (within
// budget), intersects each with H = <-1,2,...,5>, and tests membership in
// the two B1 families plus the proof's forced memberships.
inline SearchResult<StructureReport> verify_structure_theorem(u64 p, u64 budget = kDefaultNodeBudget) {
    using Result = SearchResult<StructureReport>;
    if (p % 6 != 1)
        throw std::invalid_argument("verify_structure_theorem: requires p = 1 (mod 6)");
    MultiplierSet m15 = MultiplierSet::interval(1, 5);
    auto enumerated = enumerate_splitters_with_one(m15, p, budget);
    if (enumerated.inconclusive()) return Result::make_inconclusive(enumerated.nodes);

    StructureReport rep;
    rep.p = p;
    if (!enumerated.found()) {
        rep.family = "none";
        return Result::make_found(std::move(rep), enumerated.nodes);
    }

    auto h = subgroup_H(p, 5);
    std::set<u64> hset(h.begin(), h.end());
    bool saw_a = false, saw_b = false;
    u64 m23 = mul_mod(p - 2, inv_mod(3, p), p);  // -2/3 mod p
    u64 m25 = mul_mod(p - 2, inv_mod(5, p), p);  // -2/5 mod p
    u64 eight = canonical_mod(8, p);

    for (const auto& b : enumerated.value) {
        std::set<u64> bset(b.begin(), b.end());
        std::vector<u64> b1;
        for (u64 x : b)
            if (hset.count(x)) b1.push_back(x);

        auto sa = match_b1_family(b1, B1Config::Variant::A, p);
        auto sb = match_b1_family(b1, B1Config::Variant::B, p);
        if (sa) saw_a = true;
        if (sb) saw_b = true;
        if (!sa && !sb) rep.all_in_family = false;
        if (rep.signs.empty() && (sa || sb)) rep.signs = sa ? *sa : *sb;

        if (!bset.count(m23) && !bset.count(m25)) rep.forced_ratio_ok = false;
        if (!bset.count(eight) && !bset.count((p - eight) % p)) rep.forced_eight_ok = false;
    }
    rep.splitters_found = enumerated.value.size();
    if (!rep.all_in_family) rep.family = "none";
    else if (saw_a && saw_b) rep.family = "both";
    else if (saw_a) rep.family = "A";
    else rep.family = "B";
    return Result::make_found(std::move(rep), enumerated.nodes);
}

// Lemma 4.2 cross-check: M = [-k1,k2]* a direct factor of Z_p^* iff of H.
// Both sides are computed independently; the return value is their
// agreement.
inline bool reduce_to_H_check(u64 p, i64 k1, i64 k2, u64 budget = kDefaultNodeBudget) {
    MultiplierSet m = MultiplierSet::interval(k1, k2);
    auto whole = find_splitter(m, p, budget);
    if (whole.inconclusive())
        throw std::runtime_error("reduce_to_H_check: splitter search exceeded budget");

    auto images = reduce_multipliers(m, p);
    bool in_h = false;
    if (images) {
        auto h = subgroup_H(p, k2);
        auto ctx = GroupContext::multiplicative(p, h);
        bool all_inside = true;
        for (u64 v : *images)
            if (!ctx.contains(v)) { all_inside = false; break; }
        if (all_inside) {
            auto comp = find_complement(*images, ctx, budget);
            if (comp.inconclusive())
                throw std::runtime_error("reduce_to_H_check: complement search exceeded budget");
            in_h = comp.found();
        }
    }
    return whole.found() == in_h;
}

}  // namespace splitterlab
