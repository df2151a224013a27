#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdeg/blocks.hpp"
#include "blockdeg/chartable.hpp"
#include "blockdeg/fixtures.hpp"
#include "blockdeg/lietype.hpp"
#include "blockdeg/numtheory.hpp"

using namespace blockdeg;
using namespace blockdeg::lietype;

TEST_CASE("group orders") {
    CHECK(group_order(make_family(Family::PSL, 2, 5)) == 60);
    CHECK(group_order(make_family(Family::PSL, 2, 7)) == 168);
    CHECK(group_order(make_family(Family::PSL, 2, 9)) == 360);
    CHECK(group_order(make_family(Family::PSL, 3, 2)) == 168);
    CHECK(group_order(make_family(Family::PSL, 3, 4)) == 20160);
    CHECK(group_order(make_family(Family::PSp, 2, 3)) == 25920);
    CHECK(group_order(make_family(Family::PSU, 4, 2)) == 25920); // PSU4(2) = PSp4(3)
    CHECK(group_order(make_family(Family::PSU, 3, 3)) == 6048);
    CHECK(group_order(make_family(Family::SL2even, 2, 8)) == 504);
    CHECK(group_order(make_family(Family::SL2even, 2, 32)) == 32736);
    CHECK_THROWS_AS(make_family(Family::PSL, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_family(Family::PSL, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(make_family(Family::SL2even, 2, 9), std::invalid_argument);
}

TEST_CASE("steinberg degrees are the q-part of the order") {
    for (auto f : {make_family(Family::PSL, 2, 8), make_family(Family::PSL, 3, 2),
                   make_family(Family::PSp, 2, 3), make_family(Family::PSU, 3, 3),
                   make_family(Family::SL2even, 2, 16), make_family(Family::PSL, 4, 3)}) {
        auto st = steinberg_degree(f);
        u64 p = defining_characteristic(f);
        CHECK(st == numtheory::p_part(group_order(f), p));
    }
    CHECK(steinberg_degree(make_family(Family::PSL, 2, 8)) == 8);
    CHECK(steinberg_degree(make_family(Family::PSL, 3, 2)) == 8);
    CHECK(steinberg_degree(make_family(Family::PSp, 2, 3)) == 81);
}

TEST_CASE("PSL2 degree sets against the oracle") {
    CHECK(psl2_degree_set(5) == std::set<u64>{1, 3, 4, 5});
    CHECK(psl2_degree_set(7) == std::set<u64>{1, 3, 6, 7, 8});
    CHECK(psl2_degree_set(8) == std::set<u64>{1, 7, 8, 9});
    CHECK(psl2_degree_set(9) == std::set<u64>{1, 5, 8, 9, 10});
    CHECK(psl2_degree_set(13) == std::set<u64>{1, 7, 12, 13, 14});
    for (u64 q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27}) {
        auto t = chartable::character_table(fixtures::psl2_group(q));
        auto oracle = chartable::degree_set(t);
        std::set<u64> closed = psl2_degree_set(q);
        CHECK(std::set<u64>(oracle.begin(), oracle.end()) == closed);
    }
    CHECK_THROWS_AS(psl2_degree_set(3), std::invalid_argument);
}

TEST_CASE("defect-zero upper bounds for cd(B0)") {
    CHECK(psl2_b0_upper(17, 3) == std::set<u64>{1, 16, 17});
    CHECK(psl2_b0_upper(8, 7) == std::set<u64>{1, 8, 9});
    CHECK(psl2_b0_upper(5, 3) == std::set<u64>{1, 4, 5});
    CHECK_THROWS_AS(psl2_b0_upper(8, 5), std::invalid_argument); // 5 does not divide 504

    // cd(B0) must land inside the defect-zero upper bound
    for (u64 q : {4, 5, 7, 8, 9, 11, 13}) {
        auto t = chartable::character_table(fixtures::psl2_group(q));
        for (u64 p : numtheory::prime_divisors(t.order)) {
            auto upper = psl2_b0_upper(q, p);
            for (u64 d : blocks::cd_b0(t, p)) CHECK(upper.count(d) == 1);
        }
    }
}

TEST_CASE("defining characteristic principal blocks") {
    CHECK(defining_char_b0(make_family(Family::PSL, 2, 5)) == std::set<u64>{1, 3, 4});
    CHECK(defining_char_b0(make_family(Family::SL2even, 2, 8)) == std::set<u64>{1, 7, 9});
    CHECK(defining_char_b0(make_family(Family::SL2even, 2, 4)) == std::set<u64>{1, 3, 5});
    CHECK_THROWS_AS(defining_char_b0(make_family(Family::PSp, 2, 3)), std::invalid_argument);

    struct Case {
        u64 q;
        u64 p;
    };
    for (auto [q, p] : {Case{5, 5}, Case{8, 2}, Case{4, 2}, Case{9, 3}, Case{7, 7}}) {
        auto t = chartable::character_table(fixtures::psl2_group(q));
        auto expect = defining_char_b0(make_family(q % 2 == 0 ? Family::SL2even : Family::PSL, 2, q));
        auto got = blocks::cd_b0(t, p);
        CHECK(std::set<u64>(got.begin(), got.end()) == expect);
    }
}

TEST_CASE("PSL3/PSU3 prime power degrees") {
    auto d = psl3_prime_power_degrees(2, +1);
    CHECK(d.steinberg == 8);
    CHECK(d.series == 7);
    CHECK(!d.series_power_of_two);
    auto du = psl3_prime_power_degrees(2, -1);
    CHECK(du.steinberg == 8);
    CHECK(du.series == 3);
    CHECK(!du.series_power_of_two);

    // PSL3(2) = PSL2(7): both degrees occur in the oracle table
    auto t = chartable::character_table(fixtures::psl2_group(7));
    auto ds = chartable::degree_set(t);
    CHECK(std::find(ds.begin(), ds.end(), 8) != ds.end());
    CHECK(std::find(ds.begin(), ds.end(), 7) != ds.end());

    for (u64 q = 2; q <= 64; ++q) {
        if (!numtheory::is_prime_power(q)) continue;
        CHECK(!psl3_prime_power_degrees(q, +1).series_power_of_two);
        CHECK(!psl3_prime_power_degrees(q, -1).series_power_of_two);
    }
}
