#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockdeg/gfp.hpp"
#include "blockdeg/util.hpp"

namespace blockdeg::cyclo {

using i64 = long long;
using u64 = std::uint64_t;

u64 euler_phi(u64 n);

// Phi_n over Z, constant coefficient first; computed by recursive division
// of x^n - 1 and cached.
const std::vector<i64>& cyclotomic_polynomial(u64 n);

// An element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// fully reduced modulo Phi_n. Conductor-1 elements are plain integers.
struct Cyc {
    u64 conductor = 1;
    std::vector<i64> coeffs{0};
    bool operator==(const Cyc&) const = default; // structural; see cyc_equal for values
};

Cyc cyc_int(i64 v);
Cyc cyc_zero(u64 n);
Cyc cyc_root(u64 n, u64 k); // zeta_n^k

bool cyc_is_zero(const Cyc& a);
std::optional<i64> cyc_as_int(const Cyc& a);

// Reduce a sparse sum  sum_i c_i * zeta_n^{e_i}  (0 <= e_i < n) to the power basis.
std::vector<i64> cyc_reduce_sparse(u64 n, const std::vector<std::pair<u64, i64>>& terms);
Cyc cyc_from_root_counts(u64 n, const std::vector<i64>& counts); // counts indexed by exponent

Cyc cyc_embed(const Cyc& a, u64 n); // a.conductor | n
Cyc cyc_add(const Cyc& a, const Cyc& b);
Cyc cyc_sub(const Cyc& a, const Cyc& b);
Cyc cyc_mul(const Cyc& a, const Cyc& b);
Cyc cyc_neg(const Cyc& a);
Cyc cyc_conj(const Cyc& a); // zeta -> zeta^{-1}
Cyc cyc_scale(const Cyc& a, i64 s);
Cyc cyc_divexact(const Cyc& a, i64 d); // throws verification_error unless exact

bool cyc_equal(const Cyc& a, const Cyc& b); // value equality (coerces via lcm)

// Total order used for canonical row sorting: conductor ascending, then the
// first differing coefficient with the larger value first.
int cyc_cmp(const Cyc& a, const Cyc& b);

std::string cyc_to_string(const Cyc& a);

// ---------------------------------------------------------------------------
// Reduction modulo a maximal ideal above p.

// All monic irreducible factors of Phi_m over F_p (gcd(m, p) = 1), sorted by
// coefficient vector. Built from Frobenius orbits on m-th roots of unity in
// F_{p^d}, d = ord_m(p); fully deterministic output.
std::vector<gfp::Poly> cyclotomic_factors_mod_p(u64 m, u64 p);

// Ring surjection Z[zeta_n] -> F_{p^d}. When p | n the p-part of zeta_n maps
// to 1; the modulus is an irreducible factor of Phi_{n'} mod p, n' the p'-part.
struct ResidueMap {
    u64 conductor = 1;  // n
    u64 p = 2;
    u64 np = 1;         // p'-part of n
    gfp::Poly modulus;  // g, degree d
    unsigned degree = 1;
    u64 zeta_exp = 0;   // image of zeta_n is xbar^{zeta_exp}
    std::shared_ptr<gfp::Fq> field;
};

ResidueMap residue_map(u64 n, u64 p, unsigned factor_index = 0);
unsigned residue_factor_count(u64 n, u64 p);
gfp::Fq::Elem reduce_mod(const Cyc& a, const ResidueMap& m);

} // namespace blockdeg::cyclo
