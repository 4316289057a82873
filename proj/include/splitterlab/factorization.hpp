#pragma once

// Factorizations G = A + B (additive Z_n) and G = A * B (multiplicative
// subgroups of Z_p^*): verification, deterministic complement search, the
// power-replacement map A -> A^k, and the even-order obstruction test.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "splitterlab/search.hpp"
#include "splitterlab/zmod.hpp"

namespace splitterlab {

// Carrier for a factorization problem.  Additive contexts are all of Z_n;
// multiplicative contexts are an explicit subgroup of Z_p^*, verified
// closed under product and inverse at construction.
class GroupContext {
  public:
    enum class Kind { additive, multiplicative };

    static GroupContext additive(u64 n) {
        if (n < 2) throw std::invalid_argument("GroupContext: modulus must be >= 2");
        GroupContext c;
        c.kind_ = Kind::additive;
        c.modulus_ = n;
        return c;
    }

    static GroupContext multiplicative(u64 p, std::vector<u64> subgroup) {
        if (!is_prime(p)) throw std::invalid_argument("GroupContext: modulus not prime");
        std::sort(subgroup.begin(), subgroup.end());
        subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
        GroupContext c;
        c.kind_ = Kind::multiplicative;
        c.modulus_ = p;
        c.carrier_ = std::move(subgroup);
        for (u64 x : c.carrier_) {
            if (x == 0 || x >= p)
                throw std::invalid_argument("GroupContext: element outside Z_p^*");
            if (!c.contains(inv_mod(x, p)))
                throw std::invalid_argument("GroupContext: subgroup not closed under inverse");
        }
        for (u64 x : c.carrier_)
            for (u64 y : c.carrier_)
                if (!c.contains(mul_mod(x, y, p)))
                    throw std::invalid_argument("GroupContext: subgroup not closed under product");
        if (c.carrier_.empty() || c.carrier_.front() != 1)
            throw std::invalid_argument("GroupContext: subgroup must contain 1");
        return c;
    }

    Kind kind() const { return kind_; }
    u64 modulus() const { return modulus_; }
    u64 size() const { return kind_ == Kind::additive ? modulus_ : carrier_.size(); }
    u64 identity() const { return kind_ == Kind::additive ? 0 : 1; }

    bool contains(u64 x) const {
        if (kind_ == Kind::additive) return x < modulus_;
        return std::binary_search(carrier_.begin(), carrier_.end(), x);
    }

    // Position of x in the carrier enumeration (ascending element order).
    u64 position(u64 x) const {
        if (kind_ == Kind::additive) return x;
        return u64(std::lower_bound(carrier_.begin(), carrier_.end(), x) - carrier_.begin());
    }

    u64 element_at(u64 pos) const {
        return kind_ == Kind::additive ? pos : carrier_[pos];
    }

    u64 op(u64 a, u64 b) const {
        return kind_ == Kind::additive ? add_mod(a, b, modulus_) : mul_mod(a, b, modulus_);
    }

    u64 inverse(u64 a) const {
        return kind_ == Kind::additive ? (a == 0 ? 0 : modulus_ - a) : inv_mod(a, modulus_);
    }

    // a composed k times (k may be negative).
    u64 power(i64 k, u64 a) const {
        if (kind_ == Kind::additive)
            return mul_mod(canonical_mod(k, modulus_), a, modulus_);
        u64 base = k < 0 ? inverse(a) : a;
        u64 e = k < 0 ? u64(-k) : u64(k);
        return pow_mod(base, e, modulus_);
    }

  private:
    GroupContext() = default;
    Kind kind_ = Kind::additive;
    u64 modulus_ = 2;
    std::vector<u64> carrier_;  // multiplicative only, sorted ascending
};

struct FactorPair {
    std::vector<u64> a;
    std::vector<u64> b;
    GroupContext context;
};

// True iff the |A|*|B| pairwise compositions are distinct and cover the
// carrier exactly.
inline bool verify_factorization(const FactorPair& pair) {
    const auto& ctx = pair.context;
    for (u64 x : pair.a)
        if (!ctx.contains(x)) throw std::invalid_argument("verify_factorization: element outside carrier");
    for (u64 x : pair.b)
        if (!ctx.contains(x)) throw std::invalid_argument("verify_factorization: element outside carrier");
    if (pair.a.empty() || pair.b.empty()) return false;
    if (pair.a.size() * pair.b.size() != ctx.size()) return false;
    std::vector<char> seen(ctx.size(), 0);
    for (u64 x : pair.a) {
        for (u64 y : pair.b) {
            u64 pos = ctx.position(ctx.op(x, y));
            if (seen[pos]) return false;
            seen[pos] = 1;
        }
    }
    return true;
}

// Deterministic complement search: is A a direct factor of the context?
// Starts from B = {identity}; grows B by covering, at each step, the
// uncovered element admitting the fewest fresh placements (ties broken by
// smallest element), trying candidates in ascending order.  Tri-state:
// found B / proven none / budget exceeded.
inline SearchResult<std::vector<u64>> find_complement(
    const std::vector<u64>& a_in, const GroupContext& ctx,
    u64 budget = kDefaultNodeBudget) {
    using Result = SearchResult<std::vector<u64>>;
    std::vector<u64> a(a_in);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (u64 x : a)
        if (!ctx.contains(x)) throw std::invalid_argument("find_complement: element outside carrier");
    u64 nodes = 0;
    if (a.empty() || ctx.size() % a.size() != 0) return Result::make_none(nodes);

    const u64 carrier = ctx.size();
    std::vector<char> covered(carrier, 0);
    std::vector<u64> ainv(a.size());
    for (size_t i = 0; i < a.size(); ++i) ainv[i] = ctx.inverse(a[i]);

    std::vector<u64> b{ctx.identity()};
    for (u64 x : a) {
        u64 pos = ctx.position(ctx.op(x, ctx.identity()));
        if (covered[pos]) return Result::make_none(nodes);  // A itself collides
        covered[pos] = 1;
    }

    struct Placement {
        u64 b;
        std::vector<u64> block;  // covered positions
    };

    auto placements_for = [&](u64 gpos) {
        std::vector<Placement> out;
        u64 g = ctx.element_at(gpos);
        std::vector<u64> cands;
        cands.reserve(a.size());
        for (u64 inv : ainv) cands.push_back(ctx.op(g, inv));
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (u64 cand : cands) {
            std::vector<u64> block;
            block.reserve(a.size());
            bool ok = true;
            for (u64 x : a) {
                u64 pos = ctx.position(ctx.op(x, cand));
                if (covered[pos]) { ok = false; break; }
                block.push_back(pos);
            }
            if (ok) out.push_back({cand, std::move(block)});
        }
        return out;
    };

    bool exceeded = false;
    std::vector<u64> solution;

    auto rec = [&](auto&& self) -> bool {
        u64 first_uncovered = carrier;
        for (u64 i = 0; i < carrier; ++i)
            if (!covered[i]) { first_uncovered = i; break; }
        if (first_uncovered == carrier) {
            solution = b;
            std::sort(solution.begin(), solution.end());
            return true;
        }
        std::vector<Placement> best;
        bool have = false;
        for (u64 i = first_uncovered; i < carrier; ++i) {
            if (covered[i]) continue;
            auto pl = placements_for(i);
            if (pl.empty()) return false;  // dead end
            if (!have || pl.size() < best.size()) {
                best = std::move(pl);
                have = true;
                if (best.size() == 1) break;
            }
        }
        for (auto& pl : best) {
            if (++nodes > budget) { exceeded = true; return false; }
            for (u64 pos : pl.block) covered[pos] = 1;
            b.push_back(pl.b);
            if (self(self)) return true;
            b.pop_back();
            for (u64 pos : pl.block) covered[pos] = 0;
            if (exceeded) return false;
        }
        return false;
    };

    if (rec(rec)) return Result::make_found(std::move(solution), nodes);
    if (exceeded) return Result::make_inconclusive(nodes);
    return Result::make_none(nodes);
}

// Hypotheses of the even-order obstruction: {0, n/2} lies in N and |N| is
// odd.  When true, N cannot be a direct factor of Z_n (n even).
inline bool is_obstructed(const std::vector<u64>& n_set, u64 n) {
    if (n % 2 != 0) throw std::invalid_argument("is_obstructed: modulus must be even");
    if (n_set.size() % 2 == 0) return false;
    bool has_zero = false, has_half = false;
    for (u64 x : n_set) {
        if (x == 0) has_zero = true;
        if (x == n / 2) has_half = true;
    }
    return has_zero && has_half;
}

// {k*a} (additive) or {a^k} (multiplicative); duplicates merge, so the
// image may shrink -- that shrinkage is the obstruction theorem's engine.
inline std::vector<u64> scale_set(i64 k, const std::vector<u64>& a, const GroupContext& ctx) {
    std::vector<u64> out;
    out.reserve(a.size());
    for (u64 x : a) out.push_back(ctx.power(k, x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace splitterlab
