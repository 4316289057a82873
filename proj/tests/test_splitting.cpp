#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "splitterlab/splitting.hpp"

using namespace splitterlab;

namespace {

// Independent oracle: brute-force splitter search that picks block
// representatives s in ascending order (a different search shape from the
// library's fail-first cover search).
bool brute_force_splits(const MultiplierSet& m, u64 n) {
    auto images = reduce_multipliers(m, n);
    if (!images) return false;
    if ((n - 1) % m.size() != 0) return false;
    std::vector<char> covered(n, 0);
    auto rec = [&](auto&& self, u64 min_s, u64 left) -> bool {
        if (left == 0) return true;
        for (u64 s = min_s; s < n; ++s) {
            std::vector<u64> block;
            bool ok = true;
            for (u64 mi : *images) {
                u64 v = mul_mod(mi, s, n);
                if (v == 0 || covered[v]) { ok = false; break; }
                block.push_back(v);
            }
            if (ok) {
                std::sort(block.begin(), block.end());
                ok = std::adjacent_find(block.begin(), block.end()) == block.end();
            }
            if (!ok) continue;
            for (u64 v : block) covered[v] = 1;
            if (self(self, s + 1, left - 1)) return true;
            for (u64 v : block) covered[v] = 0;
        }
        return false;
    };
    return rec(rec, 1, (n - 1) / m.size());
}

}  // namespace

TEST_CASE("multiplier set construction and interval detection") {
    auto m = MultiplierSet::interval(1, 5);
    REQUIRE(m.elements() == std::vector<i64>{-1, 1, 2, 3, 4, 5});
    REQUIRE(m.interval_form() == std::pair<i64, i64>{1, 5});

    auto plain = MultiplierSet({1, 3, 27});
    REQUIRE_FALSE(plain.interval_form().has_value());

    auto one_k = MultiplierSet({1, 2, 3});
    REQUIRE(one_k.interval_form() == std::pair<i64, i64>{0, 3});

    CHECK_THROWS_AS(MultiplierSet({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MultiplierSet(std::vector<i64>{}), std::invalid_argument);
}

TEST_CASE("parse_multipliers accepts ranges and lists") {
    REQUIRE(parse_multipliers("-1..5") == MultiplierSet::interval(1, 5));
    REQUIRE(parse_multipliers("1..4") == MultiplierSet::interval(0, 4));
    REQUIRE(parse_multipliers("-1,1,2") == MultiplierSet({-1, 1, 2}));
    REQUIRE(parse_multipliers("1,3,27") == MultiplierSet({1, 3, 27}));
}

TEST_CASE("reduce_multipliers fixtures") {
    auto m15 = MultiplierSet::interval(1, 5);
    auto r = reduce_multipliers(m15, 7);
    REQUIRE(r.has_value());
    REQUIRE(*r == std::vector<u64>{6, 1, 2, 3, 4, 5});

    REQUIRE_FALSE(reduce_multipliers(MultiplierSet({1, 8}), 7).has_value());  // 1 = 8 (mod 7)
    REQUIRE_FALSE(reduce_multipliers(MultiplierSet({1, 7}), 7).has_value());  // 7 = 0 (mod 7)
}

TEST_CASE("verify_splitting fixtures") {
    CHECK(verify_splitting(MultiplierSet::interval(1, 5), {1}, 7));
    CHECK(verify_splitting(MultiplierSet({1, 2}), {1, 4}, 5));
    // singular splitting of Z_4 by {-1,1,2}
    CHECK(verify_splitting(MultiplierSet({-1, 1, 2}), {1}, 4));
    CHECK_FALSE(verify_splitting(MultiplierSet({1, 2}), {1, 2}, 5));
    CHECK_FALSE(verify_splitting(MultiplierSet::interval(1, 5), {1, 2}, 7));  // count mismatch
}

TEST_CASE("is_nonsingular fixtures") {
    CHECK(is_nonsingular(MultiplierSet::interval(1, 5), 7));
    CHECK_FALSE(is_nonsingular(MultiplierSet({-1, 1, 2}), 4));
    CHECK(is_nonsingular(MultiplierSet({1, 3, 27}), 5));
}

TEST_CASE("nonexistence_guard fixtures") {
    CHECK(nonexistence_guard(MultiplierSet::interval(1, 2)));
    CHECK(nonexistence_guard(MultiplierSet::interval(2, 3)));
    CHECK_FALSE(nonexistence_guard(MultiplierSet::interval(1, 3)));  // |M| = 4 even
    CHECK_FALSE(nonexistence_guard(MultiplierSet({1, 2, 3})));       // -1 missing
}

TEST_CASE("find_splitter fixtures") {
    auto r = find_splitter(MultiplierSet({1, 2, 3}), 7);
    REQUIRE(r.found());
    REQUIRE(r.value.splitters == std::vector<u64>{1, 6});
    REQUIRE(r.value.nonsingular);

    REQUIRE(find_splitter(MultiplierSet({1, 2}), 7).none());

    // the parity-obstructed set splits no prime at all
    for (u64 p = 2; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        REQUIRE(find_splitter(MultiplierSet::interval(1, 2), p).none());
    }
}

TEST_CASE("find_splitter handles singular moduli") {
    auto r = find_splitter(MultiplierSet({-1, 1, 2}), 4);
    REQUIRE(r.found());
    REQUIRE(verify_splitting(MultiplierSet({-1, 1, 2}), r.value.splitters, 4));
    REQUIRE_FALSE(r.value.nonsingular);
}

TEST_CASE("find_splitter budget yields inconclusive") {
    auto r = find_splitter(MultiplierSet::interval(1, 5), 463, /*budget=*/2);
    REQUIRE(r.inconclusive());
}

TEST_CASE("find_splitter agrees with ascending brute force for p <= 31") {
    std::vector<MultiplierSet> sets = {
        MultiplierSet({1, 2}),        MultiplierSet({1, 2, 3}),
        MultiplierSet::interval(1, 2), MultiplierSet::interval(1, 3),
        MultiplierSet::interval(2, 2), MultiplierSet({1, 3, 27}),
        MultiplierSet::interval(1, 5),
    };
    for (u64 p = 3; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        for (const auto& m : sets) {
            auto r = find_splitter(m, p);
            REQUIRE_FALSE(r.inconclusive());
            REQUIRE(r.found() == brute_force_splits(m, p));
            if (r.found()) REQUIRE(verify_splitting(m, r.value.splitters, p));
        }
    }
}

TEST_CASE("certificates scale by units") {
    // if S splits then so does c*S for every unit c
    std::vector<std::pair<MultiplierSet, u64>> cases = {
        {MultiplierSet({1, 2, 3}), 7},
        {MultiplierSet::interval(1, 3), 5},
        {MultiplierSet::interval(1, 5), 7},
        {MultiplierSet({1, 2}), 5},
    };
    for (auto& [m, p] : cases) {
        auto r = find_splitter(m, p);
        REQUIRE(r.found());
        for (u64 c = 1; c < p; ++c) {
            std::vector<u64> scaled;
            for (u64 s : r.value.splitters) scaled.push_back(mul_mod(c, s, p));
            REQUIRE(verify_splitting(m, scaled, p));
        }
    }
}

TEST_CASE("splits_nonsingularly via the per-prime reduction") {
    REQUIRE(splits_nonsingularly(MultiplierSet({1, 2}), 15).found());
    REQUIRE(splits_nonsingularly(MultiplierSet({1, 2}), 35).none());  // fails at p = 7
    CHECK_THROWS_AS(splits_nonsingularly(MultiplierSet({-1, 1, 2}), 4), std::invalid_argument);

    // prime modulus: same verdict as find_splitter
    for (u64 p : {5ull, 7ull, 11ull, 13ull}) {
        auto direct = find_splitter(MultiplierSet({1, 2}), p);
        auto reduced = splits_nonsingularly(MultiplierSet({1, 2}), p);
        REQUIRE(direct.found() == reduced.found());
    }
}

TEST_CASE("Hickerson equivalence on square-free n up to 60") {
    std::vector<MultiplierSet> sets = {
        MultiplierSet({1, 2}),
        MultiplierSet({1, 2, 3}),
        MultiplierSet::interval(1, 1),
        MultiplierSet::interval(1, 3),
    };
    auto square_free = [](u64 n) {
        for (auto [p, e] : factorize(n).factors)
            if (e > 1) return false;
        return true;
    };
    for (u64 n = 2; n <= 60; ++n) {
        if (!square_free(n)) continue;
        for (const auto& m : sets) {
            if (!is_nonsingular(m, n)) continue;
            auto via_primes = splits_nonsingularly(m, n);
            auto direct = find_splitter(m, n);
            REQUIRE_FALSE(via_primes.inconclusive());
            REQUIRE_FALSE(direct.inconclusive());
            REQUIRE(via_primes.found() == direct.found());
        }
    }
}

TEST_CASE("trivial splittings from the corollary") {
    auto c1 = trivial_splitting(MultiplierSet::interval(1, 5));
    REQUIRE(c1.has_value());
    REQUIRE(c1->modulus == 7);
    REQUIRE(c1->splitters == std::vector<u64>{1});

    auto c2 = trivial_splitting(MultiplierSet::interval(0, 4));  // [1,4], p = 5
    REQUIRE(c2.has_value());
    REQUIRE(c2->modulus == 5);
    REQUIRE(c2->splitters == std::vector<u64>{1});

    auto c3 = trivial_splitting(MultiplierSet::interval(0, 3));  // [1,3], 2k+1 = 7
    REQUIRE(c3.has_value());
    REQUIRE(c3->modulus == 7);
    REQUIRE(c3->splitters == std::vector<u64>{1, 6});
    REQUIRE(verify_splitting(MultiplierSet::interval(0, 3), c3->splitters, 7));

    CHECK_THROWS_AS(trivial_splitting(MultiplierSet({1, 3, 27})), std::invalid_argument);
}

TEST_CASE("counting invariant holds on every certificate") {
    for (u64 p : {5ull, 7ull, 13ull, 31ull}) {
        for (auto& m : {MultiplierSet({1, 2}), MultiplierSet({1, 2, 3})}) {
            auto r = find_splitter(m, p);
            if (!r.found()) continue;
            REQUIRE(m.size() * r.value.splitters.size() == p - 1);
        }
    }
}
