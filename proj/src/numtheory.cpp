#include "blockdeg/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace blockdeg {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n); }
unsigned thread_count() { return g_threads.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned nt = thread_count();
    if (nt <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = std::min<std::size_t>(nt, n);
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

} // namespace blockdeg

namespace blockdeg::numtheory {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = m == 1 ? 0 : 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime(static_cast<u64>(n.get_ui()));
    return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

std::vector<u64> primes_below(u64 limit) {
    std::vector<u64> out;
    if (limit <= 2) return out;
    std::vector<bool> sieve(limit, true);
    sieve[0] = sieve[1] = false;
    for (u64 i = 2; i * i < limit; ++i)
        if (sieve[i])
            for (u64 j = i * i; j < limit; j += i) sieve[j] = false;
    for (u64 i = 2; i < limit; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

namespace {

u64 brent_rho(u64 n) {
    // n composite, odd, not a prime power of small primes; returns a nontrivial factor.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        int power = 1, lam = 0;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = f(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break; // cycle without factor; retry with next c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

mpz_class mpz_rho(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        do {
            x = f(x);
            y = f(f(y));
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (d == 1);
        if (d != 1 && d != n) return d;
    }
}

void mpz_factor_rec(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = mpz_rho(n);
    mpz_factor_rec(d, out);
    mpz_factor_rec(n / d, out);
}

} // namespace

std::map<u64, unsigned> factorize(u64 n) {
    require(n >= 1, "factorize: n must be positive");
    std::map<u64, unsigned> out;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
    require(n >= 1, "factorize: n must be positive");
    std::map<mpz_class, unsigned> out;
    mpz_class m = n;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                  37ULL, 41ULL, 43ULL, 47ULL, 53ULL, 59ULL, 61ULL, 67ULL, 71ULL, 73ULL}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            m /= static_cast<unsigned long>(p);
        }
    }
    if (m > 1) mpz_factor_rec(m, out);
    return out;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

unsigned valuation(u64 n, u64 p) {
    require(n > 0 && p >= 2, "valuation: need n > 0, p >= 2");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

unsigned valuation(const mpz_class& n, u64 p) {
    require(n > 0 && p >= 2, "valuation: need n > 0, p >= 2");
    unsigned v = 0;
    mpz_class m = n;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= static_cast<unsigned long>(p);
        ++v;
    }
    return v;
}

mpz_class p_part(const mpz_class& n, u64 p) {
    mpz_class out = 1;
    unsigned v = valuation(n, p);
    for (unsigned i = 0; i < v; ++i) out *= static_cast<unsigned long>(p);
    return out;
}

u64 multiplicative_order(u64 a, u64 m) {
    require(m >= 1, "multiplicative_order: modulus must be positive");
    if (m == 1) return 1;
    a %= m;
    require(std::gcd(a, m) == 1, "multiplicative_order: gcd(a, m) != 1");
    // The order divides lambda(m) | phi(m); strip prime factors from phi(m).
    u64 phi = 1;
    for (auto& [p, e] : factorize(m)) {
        u64 pk = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    u64 ord = phi;
    for (u64 p : prime_divisors(phi)) {
        while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
    }
    internal_check(powmod(a, ord, m) == 1, "multiplicative_order: order does not annihilate");
    return ord;
}

std::optional<PrimePower> is_prime_power(u64 n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    auto& [p, e] = *f.begin();
    return PrimePower{p, e};
}

FermatMersenneClass fermat_or_mersenne(u64 q) {
    require(q >= 2, "fermat_or_mersenne: q >= 2 required");
    if (!is_prime(q)) return {FMTag::Neither, std::nullopt};
    auto two_power_exp = [](u64 v) -> std::optional<unsigned> {
        if (v < 2 || (v & (v - 1)) != 0) return std::nullopt;
        unsigned k = 0;
        while (v > 1) {
            v >>= 1;
            ++k;
        }
        return k;
    };
    if (auto k = two_power_exp(q - 1)) return {FMTag::Fermat, k};
    if (q != UINT64_MAX)
        if (auto k = two_power_exp(q + 1)) return {FMTag::Mersenne, k};
    return {FMTag::Neither, std::nullopt};
}

mpz_class cyclotomic_value(u64 n, const mpz_class& q) {
    require(n >= 1, "cyclotomic_value: n >= 1");
    // prod over d | n of (q^d - 1)^{mu(n/d)}; accumulate numerator/denominator.
    auto mobius = [](u64 m) -> int {
        int mu = 1;
        for (u64 p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                mu = -mu;
            }
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    mpz_class num = 1, den = 1;
    for (u64 d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(n / d);
        if (mu == 0) continue;
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
        term -= 1;
        if (mu > 0)
            num *= term;
        else
            den *= term;
    }
    mpz_class out, rem;
    mpz_tdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    internal_check(rem == 0, "cyclotomic_value: non-exact Moebius quotient");
    return out;
}

std::optional<mpz_class> zsigmondy_prime(u64 q, u64 n, Sign sign) {
    require(q >= 2, "zsigmondy_prime: q >= 2 required");
    require(n >= 2, "zsigmondy_prime: n >= 2 required");
    // A prime divides q^n - 1 primitively iff it divides Phi_n(q) and has
    // multiplicative order n at q; primitive divisors of q^n + 1 are the
    // primitive divisors of q^{2n} - 1.
    u64 m = sign == Sign::Minus ? n : 2 * n;
    mpz_class phi = cyclotomic_value(m, mpz_class(static_cast<unsigned long>(q)));
    if (phi < 0) phi = -phi;
    std::vector<mpz_class> candidates;
    for (auto& [p, e] : factorize(phi)) candidates.push_back(p);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& z : candidates) {
        if (mpz_divisible_ui_p(z.get_mpz_t(), q) || z == 1) continue;
        mpz_class base = static_cast<unsigned long>(q);
        if (mpz_class(base % z) == 0) continue;
        // order of q modulo z must be exactly m
        mpz_class zm1 = z - 1;
        if (!mpz_divisible_ui_p(zm1.get_mpz_t(), m)) continue;
        mpz_class r;
        mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m), z.get_mpz_t());
        if (r != 1) continue;
        bool exact = true;
        for (auto& [pf, ee] : factorize(mpz_class(static_cast<unsigned long>(m)))) {
            unsigned long sub = static_cast<unsigned long>(m / pf.get_ui());
            mpz_class r2;
            mpz_powm_ui(r2.get_mpz_t(), base.get_mpz_t(), sub, z.get_mpz_t());
            if (r2 == 1) {
                exact = false;
                break;
            }
        }
        if (exact) return z;
    }
    return std::nullopt;
}

std::vector<CatalanTriple> catalan_solutions(u64 q_bound, unsigned n_bound, unsigned s_bound) {
    require(q_bound >= 1 && n_bound >= 1 && s_bound >= 1, "catalan_solutions: bounds >= 1");
    std::vector<CatalanTriple> out;
    mpz_class cap = 1;
    cap <<= s_bound;
    for (u64 q : primes_below(q_bound + 1)) {
        if (q == 2) continue;
        mpz_class v = static_cast<unsigned long>(q);
        for (unsigned n = 1; n <= n_bound; ++n) {
            mpz_class w = v + 1;
            if (w > cap) break;
            if (mpz_popcount(w.get_mpz_t()) == 1) {
                unsigned s = static_cast<unsigned>(mpz_sizeinbase(w.get_mpz_t(), 2)) - 1;
                if (s <= s_bound) out.push_back({q, n, s});
            }
            v *= static_cast<unsigned long>(q);
        }
    }
    return out;
}

std::vector<u64> scan_even_neighbors(unsigned exp_bound) {
    require(exp_bound >= 2, "scan_even_neighbors: exp_bound >= 2");
    require(exp_bound <= 62, "scan_even_neighbors: exp_bound > 62 exceeds 64-bit range");
    std::vector<u64> out;
    for (unsigned k = 2; k <= exp_bound; ++k) {
        u64 q = 1ULL << k;
        if (is_prime_power(q - 1) && is_prime_power(q + 1)) out.push_back(q);
    }
    return out;
}

u64 next_prime_in_progression(u64 m, u64 lower) {
    require(m >= 1, "next_prime_in_progression: modulus >= 1");
    u64 k = lower / m + 1;
    for (;; ++k) {
        u64 cand = k * m + 1;
        internal_check(cand > lower, "next_prime_in_progression: overflow");
        if (is_prime(cand)) return cand;
    }
}

} // namespace blockdeg::numtheory
