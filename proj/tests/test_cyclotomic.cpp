#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blockdeg/cyclotomic.hpp"
#include "blockdeg/numtheory.hpp"

using namespace blockdeg;
using namespace blockdeg::cyclo;

namespace {

// random sparse element with small coefficients, deterministic seed
Cyc random_cyc(std::mt19937_64& rng, u64 n) {
    std::vector<std::pair<u64, long long>> terms;
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<u64> expo(0, n - 1);
    for (int i = 0; i < 5; ++i) terms.emplace_back(expo(rng), coeff(rng));
    return Cyc{n, cyc_reduce_sparse(n, terms)};
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<i64>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<i64>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<i64>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(105).size() == 49); // first with a -2 coefficient
    CHECK(cyclotomic_polynomial(105)[7] == -2);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(30) == 8);
    CHECK(euler_phi(7440) == 1920);
}

TEST_CASE("basic identities") {
    CHECK(cyc_equal(cyc_mul(cyc_root(4, 1), cyc_root(4, 1)), cyc_int(-1)));
    CHECK(cyc_equal(cyc_add(cyc_root(3, 1), cyc_root(3, 2)), cyc_int(-1)));
    CHECK(cyc_equal(cyc_conj(cyc_root(5, 1)), cyc_root(5, 4)));
    CHECK(cyc_equal(cyc_root(6, 3), cyc_int(-1)));
    CHECK(cyc_is_zero(cyc_sub(cyc_root(8, 1), cyc_root(8, 1))));
    CHECK(cyc_as_int(cyc_root(4, 2)) == -1);
    CHECK(!cyc_as_int(cyc_root(8, 1)).has_value());

    // Phi_n(zeta_n) = 0
    for (u64 n : {4, 9, 12, 30}) {
        const auto& phi = cyclotomic_polynomial(n);
        Cyc acc = cyc_zero(n);
        for (std::size_t i = 0; i < phi.size(); ++i)
            acc = cyc_add(acc, cyc_scale(cyc_root(n, i), phi[i]));
        CHECK(cyc_is_zero(acc));
    }
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937_64 rng(20240817);
    for (u64 n : {1, 2, 5, 12, 24, 45, 60}) {
        for (int rep = 0; rep < 8; ++rep) {
            Cyc a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
            CHECK(cyc_equal(cyc_add(a, b), cyc_add(b, a)));
            CHECK(cyc_equal(cyc_mul(a, b), cyc_mul(b, a)));
            CHECK(cyc_equal(cyc_mul(a, cyc_add(b, c)), cyc_add(cyc_mul(a, b), cyc_mul(a, c))));
            CHECK(cyc_equal(cyc_mul(cyc_mul(a, b), c), cyc_mul(a, cyc_mul(b, c))));
            CHECK(cyc_equal(cyc_conj(cyc_conj(a)), a));
            CHECK(cyc_equal(cyc_conj(cyc_mul(a, b)), cyc_mul(cyc_conj(a), cyc_conj(b))));
        }
    }
}

TEST_CASE("embedding and mixed conductors") {
    // zeta_3 inside conductor 12 behaves like zeta_12^4
    CHECK(cyc_equal(cyc_embed(cyc_root(3, 1), 12), cyc_root(12, 4)));
    CHECK(cyc_equal(cyc_mul(cyc_root(2, 1), cyc_root(3, 1)), cyc_root(6, 5)));
    // norm of 1 + zeta_5: (1+z)(1+z^2)(1+z^3)(1+z^4) = 1
    Cyc prod = cyc_int(1);
    for (u64 k = 1; k <= 4; ++k) prod = cyc_mul(prod, cyc_add(cyc_int(1), cyc_root(5, k)));
    CHECK(cyc_equal(prod, cyc_int(1)));
    CHECK(cyc_equal(cyc_divexact(cyc_scale(cyc_root(7, 3), 6), 3), cyc_scale(cyc_root(7, 3), 2)));
    CHECK_THROWS_AS(cyc_divexact(cyc_int(5), 3), verification_error);
}

TEST_CASE("factoring Phi_m over F_p") {
    // Phi_4 = x^2+1 splits mod 5 into x+2, x+3
    auto f45 = cyclotomic_factors_mod_p(4, 5);
    REQUIRE(f45.size() == 2);
    CHECK(f45[0] == gfp::Poly{2, 1});
    CHECK(f45[1] == gfp::Poly{3, 1});
    // Phi_3 irreducible mod 2
    auto f32 = cyclotomic_factors_mod_p(3, 2);
    REQUIRE(f32.size() == 1);
    CHECK(f32[0] == gfp::Poly{1, 1, 1});
    // degree of every factor is ord_m(p)
    for (auto [m, p] : std::vector<std::pair<u64, u64>>{{15, 2}, {21, 2}, {16, 3}, {45, 2}}) {
        auto fs = cyclotomic_factors_mod_p(m, p);
        u64 d = numtheory::multiplicative_order(p % m, m);
        CHECK(fs.size() == euler_phi(m) / d);
        for (const auto& g : fs) CHECK(g.size() == d + 1);
    }
}

TEST_CASE("residue maps") {
    auto rm = residue_map(4, 5);
    CHECK(rm.degree == 1);
    // default factor is x+2 (root 3): zeta_4 -> 3
    auto img = reduce_mod(cyc_root(4, 1), rm);
    CHECK(img == gfp::Fq::Elem{3});
    // the alternate factor x+3 has root 2, the value in the worked example
    auto rm1 = residue_map(4, 5, 1);
    CHECK(reduce_mod(cyc_root(4, 1), rm1) == gfp::Fq::Elem{2});
    CHECK(residue_factor_count(4, 5) == 2);

    auto rm32 = residue_map(3, 2);
    CHECK(rm32.degree == 2);
    CHECK(rm32.modulus == gfp::Poly{1, 1, 1});

    // n = 1: the identity map to F_p
    auto rm1p = residue_map(1, 7);
    CHECK(reduce_mod(cyc_int(23), rm1p) == gfp::Fq::Elem{2});

    // p | n: the p-part of the conductor collapses to 1
    auto rm12 = residue_map(12, 2);
    CHECK(rm12.np == 3);
    CHECK(rm12.degree == 2);
    CHECK(reduce_mod(cyc_root(4, 1), rm12) == rm12.field->one());

    // defining relation maps to zero
    auto rm30 = residue_map(30, 7);
    const auto& phi30 = cyclotomic_polynomial(30);
    Cyc acc = cyc_zero(30);
    for (std::size_t i = 0; i < phi30.size(); ++i)
        acc = cyc_add(acc, cyc_scale(cyc_root(30, i), phi30[i]));
    CHECK(rm30.field->is_zero(reduce_mod(acc, rm30)));
    CHECK(rm30.degree == numtheory::multiplicative_order(7, 30));
}

TEST_CASE("reduction is a ring homomorphism") {
    std::mt19937_64 rng(777);
    for (auto [n, p] : std::vector<std::pair<u64, u64>>{{12, 5}, {30, 7}, {16, 3}, {30, 2}, {40, 5}}) {
        auto rm = residue_map(n, p);
        const auto& F = *rm.field;
        for (int rep = 0; rep < 6; ++rep) {
            Cyc a = random_cyc(rng, n), b = random_cyc(rng, n);
            CHECK(reduce_mod(cyc_add(a, b), rm) == F.add(reduce_mod(a, rm), reduce_mod(b, rm)));
            CHECK(reduce_mod(cyc_mul(a, b), rm) == F.mul(reduce_mod(a, rm), reduce_mod(b, rm)));
        }
        // conductor divisibility is enforced
        CHECK_THROWS_AS(reduce_mod(cyc_root(7, 1), rm), std::invalid_argument);
    }
}

TEST_CASE("canonical comparison puts larger leading coefficients first") {
    CHECK(cyc_cmp(cyc_int(1), cyc_int(-1)) < 0);
    CHECK(cyc_cmp(cyc_int(1), cyc_root(4, 1)) < 0); // conductor 1 before conductor 4
    CHECK(cyc_cmp(cyc_root(4, 1), cyc_root(4, 3)) < 0);
    CHECK(cyc_cmp(cyc_root(4, 1), cyc_root(4, 1)) == 0);
}
