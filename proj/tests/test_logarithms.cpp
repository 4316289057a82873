#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "splitterlab/logarithms.hpp"

using namespace splitterlab;

TEST_CASE("worked example tables satisfy the logarithm law") {
    auto g = fixtures::table_g16();
    CHECK(is_logarithm(g));
    CHECK(is_injective(g));
    CHECK_FALSE(is_bijective(g));  // 8 values into Z_16

    for (auto t : {fixtures::table_f17(), fixtures::table_f26(), fixtures::table_f35()}) {
        CHECK(is_logarithm(t));
        CHECK(is_bijective(t));
    }
}

TEST_CASE("tables with f(1) != 0 are never logarithms") {
    auto t = make_log_table({{1, 1}, {2, 2}}, 4);
    CHECK_FALSE(is_logarithm(t));
}

TEST_CASE("direct logarithm complements") {
    auto g = fixtures::table_g16();
    auto comp = direct_logarithm_complement(g);
    REQUIRE(comp.found());
    REQUIRE(comp.value == std::vector<u64>{0, 1});

    auto f = fixtures::table_f17();  // bijective onto Z_8
    auto compf = direct_logarithm_complement(f);
    REQUIRE(compf.found());
    REQUIRE(compf.value == std::vector<u64>{0});

    auto small = make_log_table({{1, 0}, {2, 1}}, 4);
    auto comps = direct_logarithm_complement(small);
    REQUIRE(comps.found());
    REQUIRE(comps.value == std::vector<u64>{0, 2});
}

TEST_CASE("km_check on the worked examples") {
    auto g = fixtures::table_g16();
    CHECK(km_check(g, KMMode::as_stated).admissible);
    CHECK(km_check(g, KMMode::strict).admissible);
    CHECK(km_check(g, KMMode::strict).clause == KMCase::neg_eight_m);

    // every bijective [-4,4]* -> Z_8 logarithm fails strict (f(2) is odd)
    auto tables = enumerate_logarithms(4, 4, 8);
    REQUIRE(tables.size() == 8);
    for (const auto& t : tables) {
        CHECK(km_check(t, KMMode::strict).admissible == false);
        CHECK(km_check(t, KMMode::as_stated).admissible == true);  // k = 8*1: vacuous as printed
    }

    // k odd without -1: clause (1) admits everything
    auto odd = make_log_table({{1, 0}, {2, 1}, {4, 2}}, 9);
    REQUIRE(is_logarithm(odd));
    auto v = km_check(odd, KMMode::as_stated);
    CHECK(v.admissible);
    CHECK(v.clause == KMCase::odd_k);

    CHECK_THROWS_AS(km_check(make_log_table({{1, 1}, {2, 0}}, 4)), std::invalid_argument);
}

TEST_CASE("doubled example tables are direct KM logarithms into Z_16") {
    for (auto f : {fixtures::table_f17(), fixtures::table_f26(), fixtures::table_f35()}) {
        auto t = fixtures::doubled(f);
        REQUIRE(t.k == 16);
        CHECK(is_logarithm(t));
        CHECK(is_injective(t));
        auto comp = direct_logarithm_complement(t);
        REQUIRE(comp.found());
        REQUIRE(comp.value == std::vector<u64>{0, 1});
        CHECK(km_check(t, KMMode::strict).admissible);
        CHECK(km_check(t, KMMode::as_stated).admissible);
    }
}

TEST_CASE("lift_8k block structure") {
    // bijective table: B = {0} lifts to the block {0..7}
    auto f = fixtures::table_f17();
    auto lifted = lift_8k(f);
    REQUIRE(lifted.k == 64);
    REQUIRE(lifted.value_of(-1) == 32);
    REQUIRE(lifted.value_of(2) == 8);
    auto comp = direct_logarithm_complement(lifted);
    REQUIRE(comp.found());
    std::vector<u64> block8{0, 1, 2, 3, 4, 5, 6, 7};
    REQUIRE(comp.value == block8);
    for (u64 v : lifted.values) REQUIRE(v % 2 == 0);

    // g: B = {0,1} lifts to {0,8} + {0..7} = {0..15}
    auto gl = lift_8k(fixtures::table_g16());
    REQUIRE(gl.k == 128);
    auto compg = direct_logarithm_complement(gl);
    REQUIRE(compg.found());
    std::vector<u64> expect;
    for (u64 b : {0, 8})
        for (u64 j = 0; j < 8; ++j) expect.push_back(b + j);
    std::sort(expect.begin(), expect.end());
    REQUIRE(compg.value == expect);
    // the block-shaped complement verifies as a factorization in its own right
    REQUIRE(verify_factorization({gl.values, expect, GroupContext::additive(128)}));

    // {1,2} -> Z_4 lifts to Z_32 with complement {0,16} + {0..7}
    auto small = lift_8k(make_log_table({{1, 0}, {2, 1}}, 4));
    REQUIRE(small.k == 32);
    auto comps = direct_logarithm_complement(small);
    REQUIRE(comps.found());
    std::vector<u64> expect_small;
    for (u64 b : {0, 16})
        for (u64 j = 0; j < 8; ++j) expect_small.push_back(b + j);
    std::sort(expect_small.begin(), expect_small.end());
    REQUIRE(comps.value == expect_small);

    CHECK_THROWS_AS(lift_8k(make_log_table({{1, 0}, {2, 0}}, 4)), std::invalid_argument);
}

TEST_CASE("lifted complement cardinality is 8x the original") {
    for (auto t : {fixtures::table_f17(), fixtures::table_g16(),
                   make_log_table({{1, 0}, {2, 1}}, 4)}) {
        auto before = direct_logarithm_complement(t);
        auto after = direct_logarithm_complement(lift_8k(t));
        REQUIRE(before.found());
        REQUIRE(after.found());
        REQUIRE(after.value.size() == 8 * before.value.size());
    }
}

TEST_CASE("enumerate_logarithms") {
    // (1,2,3): f(-1) would need order 2 in Z_3, impossible injectively
    REQUIRE(enumerate_logarithms(1, 2, 3).empty());

    // (4,4,8) contains a table with f(-1) = 4, f(1) = 0
    auto tables44 = enumerate_logarithms(4, 4, 8);
    REQUIRE_FALSE(tables44.empty());
    for (const auto& t : tables44) {
        REQUIRE(is_logarithm(t));
        REQUIRE(is_bijective(t));
        REQUIRE(t.value_of(1) == 0);
        REQUIRE(t.value_of(-1) == 4);
    }

    // (1,7,8) contains the printed table
    auto tables17 = enumerate_logarithms(1, 7, 8);
    auto printed = fixtures::table_f17();
    bool contains = false;
    for (const auto& t : tables17)
        if (t.values == printed.values) contains = true;
    REQUIRE(contains);

    // lexicographic order of value vectors
    for (size_t i = 1; i < tables17.size(); ++i)
        REQUIRE(tables17[i - 1].values < tables17[i].values);

    // domain size must equal k for a bijection
    REQUIRE(enumerate_logarithms(1, 2, 8).empty());
}

TEST_CASE("forced values across all enumerated tables") {
    for (auto [k1, k2] : {std::pair{4, 4}, {1, 7}, {2, 6}, {3, 5}}) {
        for (const auto& t : enumerate_logarithms(k1, k2, 8)) {
            REQUIRE(t.value_of(1) == 0);
            REQUIRE(t.value_of(-1) == 4);  // k even, injective: f(-1) = k/2 forced
        }
    }
}

TEST_CASE("find_split_primes on the g table") {
    auto certs = find_split_primes(fixtures::table_g16(), 10000, /*limit=*/2);
    REQUIRE(certs.size() == 2);
    REQUIRE(certs[0].modulus == 1873);
    REQUIRE(certs[1].modulus == 2161);
    for (const auto& c : certs) {
        REQUIRE(verify_splitting(MultiplierSet(c.multipliers), c.splitters, c.modulus));
    }
}

TEST_CASE("find_split_primes is independent of the worker count") {
    auto seq = find_split_primes(fixtures::doubled(fixtures::table_f35()), 30000, 2, 1);
    auto par = find_split_primes(fixtures::doubled(fixtures::table_f35()), 30000, 2, 4);
    REQUIRE(seq.size() == par.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        REQUIRE(seq[i].modulus == par[i].modulus);
        REQUIRE(seq[i].splitters == par[i].splitters);
    }
    REQUIRE(seq.size() == 2);
    REQUIRE(seq[0].modulus == 12721);
    REQUIRE(seq[1].modulus == 26641);
}

TEST_CASE("find_split_primes rejects non-direct seeds and small bounds") {
    CHECK_THROWS_AS(find_split_primes(make_log_table({{1, 0}, {2, 0}}, 4), 100),
                    std::invalid_argument);
    REQUIRE(find_split_primes(fixtures::table_g16(), 100).empty());  // below first hit
}

TEST_CASE("index logarithm of a base splitting is a direct logarithm") {
    auto t = index_logarithm(MultiplierSet({1, 2, 3}), 7);
    REQUIRE(t.k == 6);
    REQUIRE(is_logarithm(t));
    REQUIRE(is_injective(t));
    REQUIRE(is_direct_logarithm(t));
    REQUIRE(t.value_of(1) == 0);
    REQUIRE(t.value_of(3) == 1);  // 3 is the primitive root of 7
    REQUIRE(t.value_of(2) == 2);  // 3^2 = 2 (mod 7)
}

TEST_CASE("bootstrap_from_prime fixtures") {
    auto certs = bootstrap_from_prime(MultiplierSet({1, 2, 3}), 7, 10000, /*limit=*/3);
    REQUIRE(certs.size() == 3);
    REQUIRE(certs[0].modulus == 241);
    REQUIRE(certs[1].modulus == 337);
    REQUIRE(certs[2].modulus == 1297);
    for (const auto& c : certs)
        REQUIRE(verify_splitting(MultiplierSet(c.multipliers), c.splitters, c.modulus));

    auto m15 = bootstrap_from_prime(MultiplierSet::interval(1, 5), 7, 10000);
    REQUIRE(m15.size() == 1);
    REQUIRE(m15[0].modulus == 1489);

    CHECK_THROWS_AS(bootstrap_from_prime(MultiplierSet::interval(1, 2), 7, 1000),
                    std::invalid_argument);
}
