#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdeg/blocks.hpp"
#include "blockdeg/fixtures.hpp"
#include "blockdeg/numtheory.hpp"

using namespace blockdeg;
using namespace blockdeg::blocks;
using chartable::CharacterTable;
using chartable::character_table;

namespace {

CharacterTable table_of(const char* name) {
    return character_table(fixtures::resolve_group(name));
}

} // namespace

TEST_CASE("central characters") {
    auto t = table_of("A5");
    auto omega = central_characters(t);
    unsigned r = t.num_chars();
    for (unsigned k = 0; k < r; ++k) {
        // trivial row: omega = |K_k|
        CHECK(cyclo::cyc_equal(omega[0][k],
                               cyclo::cyc_int(static_cast<long long>(t.classes->sizes[k]))));
        // identity column: omega = 1
        CHECK(cyclo::cyc_equal(omega[k][0], cyclo::cyc_int(1)));
    }
    // the degree-5 character on the 5-cycle classes takes integer values
    for (unsigned c = 0; c < r; ++c) {
        if (t.degrees[c] != 5) continue;
        for (unsigned k = 0; k < r; ++k)
            if (t.classes->orders[k] == 5) CHECK(cyclo::cyc_as_int(omega[c][k]).has_value());
    }
    // omega is an algebra homomorphism on class sums: M_i omega = omega_i omega
    for (unsigned c = 0; c < r; ++c) {
        for (unsigned i = 0; i < r; ++i) {
            auto mi = permgroup::class_matrix(*t.classes, i);
            for (unsigned j = 0; j < r; ++j) {
                cyclo::Cyc lhs = cyclo::cyc_int(0);
                for (unsigned k = 0; k < r; ++k)
                    lhs = cyclo::cyc_add(
                        lhs, cyclo::cyc_scale(omega[c][k], static_cast<long long>(mi[j][k])));
                CHECK(cyclo::cyc_equal(lhs, cyclo::cyc_mul(omega[c][i], omega[c][j])));
            }
        }
    }
}

TEST_CASE("block partitions of A5") {
    auto t = table_of("A5");

    auto b2 = block_partition(t, 2);
    CHECK(cd_b0(t, 2) == std::vector<u64>{1, 3, 5});
    // the degree-4 character has 2-defect zero and sits alone
    for (unsigned c = 0; c < t.num_chars(); ++c)
        if (t.degrees[c] == 4) {
            CHECK(b2.defects[c] == 0);
            CHECK(b2.blocks[b2.block_of[c]].size() == 1);
        }

    CHECK(cd_b0(t, 5) == std::vector<u64>{1, 3, 4});
    auto b3 = block_partition(t, 3);
    CHECK(cd_b0(t, 3) == std::vector<u64>{1, 4, 5});
    for (unsigned c = 0; c < t.num_chars(); ++c)
        if (t.degrees[c] == 3) CHECK(b3.defects[c] == 0);

    // p coprime to the order: all singleton blocks
    auto b7 = block_partition(t, 7);
    CHECK(b7.blocks.size() == t.num_chars());
    CHECK(cd_b0(t, 7) == std::vector<u64>{1});
}

TEST_CASE("block partitions of the other fixtures") {
    auto a6 = table_of("A6");
    CHECK(cd_b0(a6, 5) == std::vector<u64>{1, 8, 9});
    auto cd3 = cd_b0(a6, 3);
    bool has_npp = false;
    for (u64 d : cd3) has_npp |= (d != 1 && !numtheory::is_prime_power(d));
    CHECK(has_npp);

    auto c6 = table_of("C6");
    CHECK(cd_b0(c6, 2) == std::vector<u64>{1});
    CHECK(cd_b0(c6, 3) == std::vector<u64>{1});

    auto l27 = table_of("PSL2(7)");
    CHECK(cd_b0(l27, 3) == std::vector<u64>{1, 7, 8});
    CHECK(cd_b0(l27, 7) == std::vector<u64>{1, 3, 6, 8}); // defining char: all but Steinberg
    auto cdl2 = cd_b0(l27, 2);
    bool six = std::find(cdl2.begin(), cdl2.end(), 6) != cdl2.end();
    CHECK(six); // the degree-6 character keeps (PSL2(7), 2) out of Theorem A

    auto sl28 = table_of("SL2(8)");
    CHECK(cd_b0(sl28, 2) == std::vector<u64>{1, 7, 9});
    CHECK(cd_b0(sl28, 3) == std::vector<u64>{1, 7, 8});
    CHECK(cd_b0(sl28, 7) == std::vector<u64>{1, 8, 9});
}

TEST_CASE("PSp4(3) blocks") {
    auto t = table_of("PSp4(3)");
    CHECK(t.order == 25920);
    auto ds = chartable::degree_set(t);
    CHECK(std::find(ds.begin(), ds.end(), 24) != ds.end()); // the (0 2 | 1) symbol degree
    CHECK(std::find(ds.begin(), ds.end(), 81) != ds.end()); // Steinberg

    // defining characteristic: the principal block is everything but Steinberg
    auto cd3 = cd_b0(t, 3);
    std::vector<u64> everything_else;
    for (u64 d : ds)
        if (d != 81) everything_else.push_back(d);
    CHECK(cd3 == everything_else);

    // no prime qualifies: cd(B_0) always holds a non-prime-power
    for (u64 p : {2, 3, 5}) {
        auto cds = cd_b0(t, p);
        bool npp = std::any_of(cds.begin(), cds.end(), [](u64 d) {
            return d != 1 && !numtheory::is_prime_power(d).has_value();
        });
        CHECK(npp);
    }
}

TEST_CASE("defects") {
    auto t = table_of("A5");
    CHECK(defect(t, 0, 2) == 2); // trivial character: nu_2(60)
    CHECK(defect(t, 0, 5) == 1);
    for (unsigned c = 0; c < t.num_chars(); ++c) {
        if (t.degrees[c] == 4) CHECK(defect(t, c, 2) == 0);
        if (t.degrees[c] == 5) CHECK(defect(t, c, 5) == 0);
    }
}

TEST_CASE("partition is invariant under the ideal and prime choices") {
    struct Case {
        const char* name;
        std::vector<u64> ps;
    };
    for (auto& [name, ps] : {Case{"A5", {2, 3, 5}}, Case{"S3", {2, 3}}, Case{"PSL2(7)", {2, 3, 7}}}) {
        auto g = fixtures::resolve_group(name);
        auto t = character_table(g);
        chartable::CharTableOptions alt;
        alt.prime_offset = 1;
        auto t_alt = character_table(g, alt);
        for (u64 p : ps) {
            auto base = block_partition(t, p);
            BlockOptions bo;
            bo.factor_index = 1; // wraps around when Phi mod p is irreducible
            CHECK(block_partition(t, p, bo) == base);
            CHECK(block_partition(t_alt, p) == base);
        }
    }
}

TEST_CASE("principal block size and parity facts from the corpus") {
    // nonsolvable fixtures: for odd p | |G| the principal block has a
    // character of even degree, and cd(B_0) has at least 3 members
    struct Case {
        const char* name;
        std::vector<u64> odd_ps;
    };
    for (auto& [name, ps] :
         {Case{"A5", {3, 5}}, Case{"A6", {3, 5}}, Case{"PSL2(7)", {3, 7}},
          Case{"SL2(8)", {3, 7}}, Case{"S5", {3, 5}}}) {
        auto t = character_table(fixtures::resolve_group(name));
        for (u64 p : ps) {
            auto cds = cd_b0(t, p);
            CHECK(cds.size() >= 3);
            bool even = std::any_of(cds.begin(), cds.end(), [](u64 d) { return d % 2 == 0; });
            CHECK(even);
            if (p >= 5) {
                unsigned coprime = 0;
                for (u64 d : cds)
                    if (d % p != 0) ++coprime;
                CHECK(coprime >= 3);
            }
        }
    }
    // ... and the same lower bound at p = 2 for the simple fixtures
    for (const char* name : {"A5", "A6", "PSL2(7)", "SL2(8)"})
        CHECK(cd_b0(character_table(fixtures::resolve_group(name)), 2).size() >= 3);
}

TEST_CASE("block hypothesis passes to normal subgroups and quotients") {
    // N = A5 inside G = S5 with quotient C2, and N = V4 inside S4 with
    // quotient S3; if cd(B_0(G)) is all prime powers the same must hold
    // downstairs (checked unconditionally when the hypothesis fires)
    auto all_pp = [](const std::vector<u64>& cds) {
        return std::all_of(cds.begin(), cds.end(), [](u64 d) {
            return d == 1 || numtheory::is_prime_power(d).has_value();
        });
    };
    auto s5 = character_table(fixtures::symmetric_group(5));
    auto a5 = character_table(fixtures::alternating_group(5));
    auto c2 = character_table(fixtures::cyclic_group(2));
    for (u64 p : {2, 3, 5}) {
        if (all_pp(cd_b0(s5, p))) {
            CHECK(all_pp(cd_b0(a5, p)));
            CHECK(all_pp(cd_b0(c2, p)));
        }
    }
    auto s4 = character_table(fixtures::symmetric_group(4));
    auto v4 = character_table(permgroup::make_group(
        4, {permgroup::perm_from_cycles("(1,2)(3,4)", 4),
            permgroup::perm_from_cycles("(1,3)(2,4)", 4)}));
    auto s3 = character_table(fixtures::symmetric_group(3));
    for (u64 p : {2, 3}) {
        if (all_pp(cd_b0(s4, p))) {
            CHECK(all_pp(cd_b0(v4, p)));
            CHECK(all_pp(cd_b0(s3, p)));
        }
    }
    // the S4 hypothesis does fire at p = 2 (degrees 1, 2, 3)
    CHECK(all_pp(cd_b0(s4, 2)));
}
