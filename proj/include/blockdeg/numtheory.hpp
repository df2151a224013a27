#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "blockdeg/util.hpp"

namespace blockdeg::numtheory {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin; the witness set is valid for all n < 3.3e24.
bool is_prime(u64 n);
bool is_prime(const mpz_class& n);

std::vector<u64> primes_below(u64 limit);

// Trial division + Brent's rho. Complete factorization, prime -> multiplicity.
std::map<u64, unsigned> factorize(u64 n);
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

std::vector<u64> prime_divisors(u64 n);

unsigned valuation(u64 n, u64 p);
unsigned valuation(const mpz_class& n, u64 p);
mpz_class p_part(const mpz_class& n, u64 p);

// Order of a in (Z/m)^*, gcd(a, m) = 1.
u64 multiplicative_order(u64 a, u64 m);

struct PrimePower {
    u64 prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

// n = p^k with k >= 1, or absent. By convention 1 is not a prime power.
std::optional<PrimePower> is_prime_power(u64 n);

enum class FMTag { Fermat, Mersenne, Neither };

struct FermatMersenneClass {
    FMTag tag = FMTag::Neither;
    std::optional<unsigned> witness; // k with q = 2^k + 1 (Fermat) or 2^k - 1 (Mersenne)
};

// q = 3 fits both shapes (2^1+1 and 2^2-1); Fermat takes precedence.
FermatMersenneClass fermat_or_mersenne(u64 q);

enum class Sign { Plus, Minus };

// Phi_n(q), computed as prod_{d|n} (q^d - 1)^{mu(n/d)}.
mpz_class cyclotomic_value(u64 n, const mpz_class& q);

// Smallest prime z | q^n - 1 (Minus) resp. q^n + 1 (Plus) dividing no earlier
// term of the same sequence; absent exactly in the Zsigmondy exceptions.
std::optional<mpz_class> zsigmondy_prime(u64 q, u64 n, Sign sign);

struct CatalanTriple {
    u64 q;
    unsigned n;
    unsigned s;
    bool operator==(const CatalanTriple&) const = default;
};

// All q^n + 1 = 2^s with q an odd prime <= q_bound, n <= n_bound, s <= s_bound.
std::vector<CatalanTriple> catalan_solutions(u64 q_bound, unsigned n_bound, unsigned s_bound);

// All q = 2^k, 2 <= k <= exp_bound, with q-1 and q+1 both prime powers.
std::vector<u64> scan_even_neighbors(unsigned exp_bound);

// Least prime l ≡ 1 (mod m) with l > lower.
u64 next_prime_in_progression(u64 m, u64 lower);

} // namespace blockdeg::numtheory
