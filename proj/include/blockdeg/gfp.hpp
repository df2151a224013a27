#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "blockdeg/util.hpp"

namespace blockdeg::gfp {

using u64 = std::uint64_t;

// Dense polynomial over F_p, constant coefficient first, normalized
// (no trailing zeros); the empty vector is the zero polynomial.
using Poly = std::vector<u64>;

Poly poly_trim(Poly f);
Poly poly_add(const Poly& a, const Poly& b, u64 p);
Poly poly_sub(const Poly& a, const Poly& b, u64 p);
Poly poly_mul(const Poly& a, const Poly& b, u64 p);
Poly poly_rem(const Poly& a, const Poly& b, u64 p);
Poly poly_monic(const Poly& a, u64 p);
Poly poly_gcd(Poly a, Poly b, u64 p); // monic
Poly poly_powmod(const Poly& base, const mpz_class& e, const Poly& mod, u64 p);
u64 poly_eval(const Poly& f, u64 x, u64 p);

bool poly_irreducible(const Poly& f, u64 p);

// Lexicographically least monic irreducible of the given degree
// (coefficient vectors compared constant-first).
Poly find_irreducible(u64 p, unsigned deg);

// Distinct roots in F_p of f, ascending. Equal-degree splitting with a
// deterministic probe sequence; p must be odd unless f splits by inspection.
std::vector<u64> poly_roots(const Poly& f, u64 p, u64 seed = 0x5eedULL);

// The field F_{p^d} = F_p[x]/(modulus). Elements are coefficient vectors of
// fixed length d (constant first).
struct Fq {
    u64 p;
    Poly modulus; // monic, degree d
    unsigned d;

    using Elem = std::vector<u64>;

    Fq(u64 p_, Poly modulus_);

    Elem zero() const { return Elem(d, 0); }
    Elem one() const;
    Elem gen() const; // class of x
    Elem from_int(u64 v) const;
    Elem from_poly(const Poly& f) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, mpz_class e) const;
    mpz_class order() const; // p^d
};

} // namespace blockdeg::gfp
