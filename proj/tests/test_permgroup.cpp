#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "blockdeg/fixtures.hpp"
#include "blockdeg/permgroup.hpp"

using namespace blockdeg;
using namespace blockdeg::permgroup;

TEST_CASE("permutation primitives") {
    auto a = perm_from_cycles("(1,2,3)(4,5)", 6);
    CHECK(a[0] == 1);
    CHECK(a[2] == 0);
    CHECK(a[3] == 4);
    CHECK(a[5] == 5);
    CHECK(perm_order(a) == 6);
    CHECK(perm_to_cycles(a) == "(1,2,3)(4,5)");
    CHECK(perm_is_identity(perm_mul(a, perm_inverse(a))));
    CHECK(perm_to_cycles(perm_identity(4)) == "()");
    CHECK(perm_pow(a, 6) == perm_identity(6));
    CHECK(perm_pow(a, -1) == perm_inverse(a));
    CHECK_THROWS_AS(perm_from_cycles("(1,7)", 6), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles("1,2", 6), std::invalid_argument);
}

TEST_CASE("group orders via the stabilizer chain") {
    auto a5 = make_group(5, {perm_from_cycles("(1,2,3,4,5)", 5), perm_from_cycles("(3,4,5)", 5)});
    CHECK(a5.order() == 60);
    auto c2 = make_group(2, {perm_from_cycles("(1,2)", 2)});
    CHECK(c2.order() == 2);
    CHECK(fixtures::resolve_group("PSL2(7)").order() == 168);
    CHECK(fixtures::symmetric_group(10).order() == 3628800);
    CHECK(fixtures::alternating_group(7).order() == 2520);
    // S_30 overflows any fixed-width integer but not the chain
    CHECK(fixtures::symmetric_group(30).order() == mpz_class("265252859812191058636308480000000"));
    auto trivial = make_group(3, {});
    CHECK(trivial.order() == 1);
    CHECK_THROWS_AS(make_group(3, {Perm{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("conjugacy classes of the small corpus") {
    auto cd = conjugacy_classes(fixtures::alternating_group(5));
    CHECK(cd.group_order == 60);
    std::multiset<u64> sizes(cd.sizes.begin(), cd.sizes.end());
    CHECK(sizes == std::multiset<u64>{1, 15, 20, 12, 12});
    CHECK(cd.sizes[0] == 1);
    CHECK(exponent(cd) == 30);

    auto c4 = conjugacy_classes(fixtures::cyclic_group(4));
    CHECK(c4.num_classes() == 4);
    for (auto s : c4.sizes) CHECK(s == 1);
    CHECK(exponent(c4) == 4);

    auto s3 = conjugacy_classes(fixtures::symmetric_group(3));
    std::multiset<u64> s3sizes(s3.sizes.begin(), s3.sizes.end());
    CHECK(s3sizes == std::multiset<u64>{1, 3, 2});
    CHECK(exponent(s3) == 6);

    // class equation and divisibility
    for (const char* name : {"A5", "S4", "C6", "PSL2(7)"}) {
        auto c = conjugacy_classes(fixtures::resolve_group(name));
        u64 sum = 0;
        for (auto s : c.sizes) {
            sum += s;
            CHECK(c.group_order % s == 0);
        }
        CHECK(sum == c.group_order);
        // representatives are least in their class, identity first
        CHECK(perm_is_identity(c.rep(0)));
        // inverse map is an involution
        for (unsigned k = 0; k < c.num_classes(); ++k)
            CHECK(c.inverse_map[c.inverse_map[k]] == k);
        // power maps at the full order land in the identity class
        for (unsigned k = 0; k < c.num_classes(); ++k)
            CHECK(c.power_class(k, c.orders[k]) == 0);
    }

    CHECK_THROWS_AS(conjugacy_classes(fixtures::symmetric_group(12), 1000),
                    std::invalid_argument);
}

TEST_CASE("class multiplication coefficients") {
    auto s3 = conjugacy_classes(fixtures::symmetric_group(3));
    // locate the transposition class
    unsigned trans = 0;
    for (unsigned k = 0; k < 3; ++k)
        if (s3.orders[k] == 2) trans = k;
    auto row = class_mult_coeffs(s3, trans, trans);
    CHECK(row[0] == 3); // three pairs of transpositions multiply to the identity

    // identity class: M_0 row j is the indicator of class j
    auto a5 = conjugacy_classes(fixtures::alternating_group(5));
    for (unsigned j = 0; j < a5.num_classes(); ++j) {
        auto r0 = class_mult_coeffs(a5, 0, j);
        for (unsigned k = 0; k < a5.num_classes(); ++k) CHECK(r0[k] == (k == j ? 1 : 0));
    }

    for (const char* name : {"S3", "S4", "A5", "C6"}) {
        auto cd = conjugacy_classes(fixtures::resolve_group(name));
        unsigned r = cd.num_classes();
        for (unsigned i = 0; i < r; ++i) {
            auto mi = class_matrix(cd, i);
            for (unsigned j = 0; j < r; ++j) {
                // counting identity: sum_k c_ijk |K_k| = |K_i| |K_j|
                u64 total = 0;
                for (unsigned k = 0; k < r; ++k) total += mi[j][k] * cd.sizes[k];
                CHECK(total == cd.sizes[i] * cd.sizes[j]);
                // inversion symmetry: c_ijk = c_{j' i' k'}
                for (unsigned k = 0; k < r; ++k) {
                    auto sym = class_mult_coeffs(cd, cd.inverse_map[j], cd.inverse_map[i]);
                    CHECK(mi[j][k] == sym[cd.inverse_map[k]]);
                }
            }
        }
    }
}

TEST_CASE("group file parsing") {
    std::istringstream in("# alternating group on 5 letters\n"
                          "degree: 5\n"
                          "\n"
                          "gen: (1,2,3,4,5)\n"
                          "gen: (3,4,5)  # a 3-cycle\n");
    auto g = parse_group_stream(in);
    CHECK(g.degree == 5);
    CHECK(g.order() == 60);

    std::istringstream bad("gen: (1,2)\n");
    CHECK_THROWS_AS(parse_group_stream(bad), std::invalid_argument);
    std::istringstream bad2("degree: 3\nfoo: bar\n");
    CHECK_THROWS_AS(parse_group_stream(bad2), std::invalid_argument);

    // format -> parse round trip
    auto a6 = fixtures::alternating_group(6);
    std::istringstream rt(format_group(a6));
    auto back = parse_group_stream(rt);
    CHECK(back.degree == a6.degree);
    CHECK(back.generators == a6.generators);
}

TEST_CASE("fixture constructions are the advertised groups") {
    CHECK(fixtures::resolve_group("A6").order() == 360);
    CHECK(fixtures::resolve_group("S5").order() == 120);
    CHECK(fixtures::resolve_group("C6").order() == 6);
    CHECK(fixtures::resolve_group("PSL2(9)").order() == 360);
    CHECK(fixtures::resolve_group("SL2(8)").order() == 504);
    CHECK(fixtures::resolve_group("SL2(16)").order() == 4080);
    CHECK(fixtures::resolve_group("PSL2(11)").order() == 660);
    CHECK(fixtures::resolve_group("PSp4(3)").order() == 25920);
    CHECK_THROWS_AS(fixtures::resolve_group("SL2(9)"), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::resolve_group("PSL2(3)"), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::resolve_group("X99(1)"), std::invalid_argument);
}
