#include "blockdeg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "blockdeg/numtheory.hpp"

namespace blockdeg::cyclo {

using i128 = __int128;

u64 euler_phi(u64 n) {
    require(n >= 1, "euler_phi: n >= 1");
    u64 phi = 1;
    for (auto& [p, e] : numtheory::factorize(n)) {
        u64 pk = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<i64> ipoly_divexact(std::vector<i64> num, const std::vector<i64>& den) {
    internal_check(!den.empty() && (den.back() == 1 || den.back() == -1),
                   "ipoly_divexact: denominator must be +-monic");
    std::vector<i64> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size() && !num.empty()) {
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.size() < den.size()) break;
        i64 c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        internal_check(num.back() == 0, "ipoly_divexact: non-exact division");
        num.pop_back();
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    internal_check(num.empty(), "ipoly_divexact: nonzero remainder");
    return q;
}

std::mutex g_phi_mutex;
std::map<u64, std::vector<i64>> g_phi_cache;

const std::vector<i64>& cyclotomic_polynomial_locked(u64 n) {
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    std::vector<i64> poly;
    if (n == 1) {
        poly = {-1, 1};
    } else {
        std::vector<i64> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (u64 d = 1; d < n; ++d)
            if (n % d == 0) num = ipoly_divexact(std::move(num), cyclotomic_polynomial_locked(d));
        poly = std::move(num);
    }
    return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

// Per-conductor reduction data: rows[e] is x^e reduced mod Phi_n for e >= phi.
struct CycContext {
    u64 n = 1;
    u64 phi = 1;
    std::vector<i64> phi_poly;
    std::map<u64, std::vector<i64>> rows;
    u64 frontier_exp = 0;             // last exponent the chain has reached
    std::vector<i64> frontier_row;    // its reduction
    std::mutex mutex;
};

std::mutex g_ctx_mutex;
std::map<u64, std::unique_ptr<CycContext>> g_ctx_cache;

CycContext& context(u64 n) {
    std::lock_guard<std::mutex> lk(g_ctx_mutex);
    auto it = g_ctx_cache.find(n);
    if (it != g_ctx_cache.end()) return *it->second;
    auto ctx = std::make_unique<CycContext>();
    ctx->n = n;
    ctx->phi = euler_phi(n);
    {
        std::lock_guard<std::mutex> lk2(g_phi_mutex);
        ctx->phi_poly = cyclotomic_polynomial_locked(n);
    }
    return *g_ctx_cache.emplace(n, std::move(ctx)).first->second;
}

// step the rolling reduction row one exponent up: r <- (x * r) mod Phi
void step_row(const CycContext& ctx, std::vector<i64>& r) {
    i64 top = r.empty() ? 0 : r[ctx.phi - 1];
    for (std::size_t i = ctx.phi - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    if (top != 0)
        for (std::size_t i = 0; i < ctx.phi; ++i) r[i] -= top * ctx.phi_poly[i];
}

// ensure ctx.rows contains every requested exponent >= phi (must be < n... or beyond for products)
void ensure_rows(CycContext& ctx, const std::vector<u64>& exps) {
    u64 maxe = 0;
    bool missing = false;
    for (u64 e : exps) {
        if (e < ctx.phi) continue;
        if (!ctx.rows.count(e)) {
            missing = true;
            maxe = std::max(maxe, e);
        }
    }
    if (!missing) return;
    std::vector<u64> wanted;
    for (u64 e : exps)
        if (e >= ctx.phi && !ctx.rows.count(e)) wanted.push_back(e);
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    u64 start;
    std::vector<i64> row;
    if (ctx.frontier_exp >= ctx.phi && ctx.frontier_exp <= wanted.front()) {
        start = ctx.frontier_exp;
        row = ctx.frontier_row;
    } else {
        start = ctx.phi;
        row.assign(ctx.phi, 0);
        for (std::size_t i = 0; i < ctx.phi; ++i) row[i] = -ctx.phi_poly[i];
    }
    std::size_t next = 0;
    while (next < wanted.size() && wanted[next] < start) ++next; // already cached
    for (u64 e = start;; ++e) {
        while (next < wanted.size() && wanted[next] == e) {
            ctx.rows.emplace(e, row);
            ++next;
        }
        if (next >= wanted.size()) {
            ctx.frontier_exp = e;
            ctx.frontier_row = row;
            break;
        }
        step_row(ctx, row);
    }
}

std::vector<i64> reduce_terms(CycContext& ctx, const std::vector<std::pair<u64, i64>>& terms) {
    std::vector<u64> exps;
    exps.reserve(terms.size());
    for (auto& [e, c] : terms) {
        require(e < ctx.n || ctx.n == 1, "cyc_reduce_sparse: exponent out of range");
        exps.push_back(e % ctx.n);
    }
    ensure_rows(ctx, exps);
    std::vector<i128> acc(ctx.phi, 0);
    for (auto& [e0, c] : terms) {
        u64 e = e0 % ctx.n;
        if (c == 0) continue;
        if (e < ctx.phi) {
            acc[e] += static_cast<i128>(c);
        } else {
            const auto& row = ctx.rows.at(e);
            for (std::size_t i = 0; i < ctx.phi; ++i) acc[i] += static_cast<i128>(c) * row[i];
        }
    }
    std::vector<i64> out(ctx.phi);
    for (std::size_t i = 0; i < ctx.phi; ++i) {
        internal_check(acc[i] <= INT64_MAX && acc[i] >= INT64_MIN,
                       "cyclotomic coefficient overflow");
        out[i] = static_cast<i64>(acc[i]);
    }
    return out;
}

} // namespace

const std::vector<i64>& cyclotomic_polynomial(u64 n) {
    require(n >= 1, "cyclotomic_polynomial: n >= 1");
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    return cyclotomic_polynomial_locked(n);
}

Cyc cyc_int(i64 v) { return Cyc{1, {v}}; }

Cyc cyc_zero(u64 n) {
    require(n >= 1, "cyc_zero: conductor >= 1");
    return Cyc{n, std::vector<i64>(euler_phi(n), 0)};
}

Cyc cyc_root(u64 n, u64 k) {
    require(n >= 1, "cyc_root: conductor >= 1");
    auto& ctx = context(n);
    std::lock_guard<std::mutex> lk(ctx.mutex);
    return Cyc{n, reduce_terms(ctx, {{k % n, 1}})};
}

bool cyc_is_zero(const Cyc& a) {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](i64 c) { return c == 0; });
}

std::optional<i64> cyc_as_int(const Cyc& a) {
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != 0) return std::nullopt;
    return a.coeffs.empty() ? 0 : a.coeffs[0];
}

std::vector<i64> cyc_reduce_sparse(u64 n, const std::vector<std::pair<u64, i64>>& terms) {
    auto& ctx = context(n);
    std::lock_guard<std::mutex> lk(ctx.mutex);
    return reduce_terms(ctx, terms);
}

Cyc cyc_from_root_counts(u64 n, const std::vector<i64>& counts) {
    require(counts.size() <= n, "cyc_from_root_counts: too many exponents");
    std::vector<std::pair<u64, i64>> terms;
    for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j] != 0) terms.emplace_back(j, counts[j]);
    return Cyc{n, cyc_reduce_sparse(n, terms)};
}

Cyc cyc_embed(const Cyc& a, u64 n) {
    require(n % a.conductor == 0, "cyc_embed: conductor must divide target");
    if (a.conductor == n) return a;
    u64 step = n / a.conductor;
    std::vector<std::pair<u64, i64>> terms;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != 0) terms.emplace_back(i * step, a.coeffs[i]);
    return Cyc{n, cyc_reduce_sparse(n, terms)};
}

namespace {
std::pair<Cyc, Cyc> coerce(const Cyc& a, const Cyc& b) {
    if (a.conductor == b.conductor) return {a, b};
    u64 l = std::lcm(a.conductor, b.conductor);
    return {cyc_embed(a, l), cyc_embed(b, l)};
}
} // namespace

Cyc cyc_add(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = coerce(a0, b0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        i128 s = static_cast<i128>(a.coeffs[i]) + b.coeffs[i];
        internal_check(s <= INT64_MAX && s >= INT64_MIN, "cyc_add: overflow");
        a.coeffs[i] = static_cast<i64>(s);
    }
    return a;
}

Cyc cyc_sub(const Cyc& a, const Cyc& b) { return cyc_add(a, cyc_neg(b)); }

Cyc cyc_neg(const Cyc& a) {
    Cyc r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

Cyc cyc_mul(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = coerce(a0, b0);
    u64 n = a.conductor;
    std::size_t phi = a.coeffs.size();
    if (n == 1) {
        i128 p = static_cast<i128>(a.coeffs[0]) * b.coeffs[0];
        internal_check(p <= INT64_MAX && p >= INT64_MIN, "cyc_mul: overflow");
        return cyc_int(static_cast<i64>(p));
    }
    std::vector<i128> conv(2 * phi - 1, 0);
    for (std::size_t i = 0; i < phi; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j)
            conv[i + j] += static_cast<i128>(a.coeffs[i]) * b.coeffs[j];
    }
    std::vector<std::pair<u64, i64>> terms;
    for (std::size_t e = 0; e < conv.size(); ++e) {
        if (conv[e] == 0) continue;
        internal_check(conv[e] <= INT64_MAX && conv[e] >= INT64_MIN, "cyc_mul: overflow");
        terms.emplace_back(e, static_cast<i64>(conv[e]));
    }
    // exponents up to 2*phi-2 stay below 2n, fold once if needed
    for (auto& [e, c] : terms)
        if (e >= n) e -= n;
    return Cyc{n, cyc_reduce_sparse(n, terms)};
}

Cyc cyc_conj(const Cyc& a) {
    if (a.conductor == 1) return a;
    std::vector<std::pair<u64, i64>> terms;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != 0) terms.emplace_back(i == 0 ? 0 : a.conductor - i, a.coeffs[i]);
    return Cyc{a.conductor, cyc_reduce_sparse(a.conductor, terms)};
}

Cyc cyc_scale(const Cyc& a, i64 s) {
    Cyc r = a;
    for (auto& c : r.coeffs) {
        i128 p = static_cast<i128>(c) * s;
        internal_check(p <= INT64_MAX && p >= INT64_MIN, "cyc_scale: overflow");
        c = static_cast<i64>(p);
    }
    return r;
}

Cyc cyc_divexact(const Cyc& a, i64 d) {
    internal_check(d != 0, "cyc_divexact: division by zero");
    Cyc r = a;
    for (auto& c : r.coeffs) {
        internal_check(c % d == 0, "cyc_divexact: non-exact division");
        c /= d;
    }
    return r;
}

bool cyc_equal(const Cyc& a0, const Cyc& b0) {
    auto [a, b] = coerce(a0, b0);
    return a.coeffs == b.coeffs;
}

int cyc_cmp(const Cyc& a, const Cyc& b) {
    if (a.conductor != b.conductor) return a.conductor < b.conductor ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] > b.coeffs[i] ? -1 : 1;
    }
    return 0;
}

std::string cyc_to_string(const Cyc& a) {
    if (auto v = cyc_as_int(a)) return std::to_string(*v);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        i64 c = a.coeffs[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        i64 ab = c < 0 ? -c : c;
        first = false;
        if (i == 0) {
            os << ab;
            continue;
        }
        if (ab != 1) os << ab << "*";
        os << "z" << a.conductor;
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<gfp::Poly> cyclotomic_factors_mod_p(u64 m, u64 p) {
    require(numtheory::is_prime(p), "cyclotomic_factors_mod_p: p must be prime");
    require(m >= 1 && std::gcd(m, p) == 1, "cyclotomic_factors_mod_p: need gcd(m, p) = 1");
    if (m == 1) return {gfp::Poly{p - 1, 1}}; // x - 1
    if (m == 2) return {gfp::Poly{1, 1}};     // x + 1

    u64 d = numtheory::multiplicative_order(p % m, m);
    gfp::Fq search_field(p, gfp::find_irreducible(p, static_cast<unsigned>(d)));
    mpz_class unit_count = search_field.order() - 1;
    mpz_class cofactor = unit_count / static_cast<unsigned long>(m);
    internal_check(cofactor * static_cast<unsigned long>(m) == unit_count,
                   "cyclotomic_factors_mod_p: m must divide p^d - 1");

    auto prime_parts = numtheory::prime_divisors(m);
    gfp::Fq::Elem zeta = search_field.zero();
    for (u64 v = 2;; ++v) {
        // decode v as an element (base-p digits) and project into the order-m subgroup
        gfp::Poly f;
        u64 t = v;
        while (t > 0) {
            f.push_back(t % p);
            t /= p;
        }
        gfp::Fq::Elem cand = search_field.pow(search_field.from_poly(f), cofactor);
        bool full_order = !search_field.is_zero(cand);
        for (u64 r : prime_parts) {
            if (!full_order) break;
            auto pw = search_field.pow(cand, mpz_class(static_cast<unsigned long>(m / r)));
            if (pw == search_field.one()) full_order = false;
        }
        if (full_order) {
            zeta = cand;
            break;
        }
    }

    // Frobenius orbits on exponents give the irreducible factors
    std::vector<gfp::Poly> factors;
    std::vector<bool> seen(m, false);
    for (u64 j = 1; j < m; ++j) {
        if (seen[j] || std::gcd(j, m) != 1) continue;
        std::vector<u64> orbit;
        u64 e = j;
        do {
            seen[e] = true;
            orbit.push_back(e);
            e = static_cast<u64>((static_cast<unsigned __int128>(e) * (p % m)) % m);
        } while (e != j);
        internal_check(orbit.size() == d, "cyclotomic_factors_mod_p: orbit size mismatch");
        // expand prod (x - zeta^e) over F_{p^d}
        std::vector<gfp::Fq::Elem> poly{search_field.one()};
        for (u64 ex : orbit) {
            auto root = search_field.pow(zeta, mpz_class(static_cast<unsigned long>(ex)));
            std::vector<gfp::Fq::Elem> next(poly.size() + 1, search_field.zero());
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = search_field.add(next[k + 1], poly[k]);
                next[k] = search_field.sub(next[k], search_field.mul(root, poly[k]));
            }
            poly = std::move(next);
        }
        gfp::Poly g(poly.size());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            for (std::size_t i = 1; i < poly[k].size(); ++i)
                internal_check(poly[k][i] == 0,
                               "cyclotomic_factors_mod_p: factor not defined over F_p");
            g[k] = poly[k][0];
        }
        factors.push_back(std::move(g));
    }
    internal_check(factors.size() == euler_phi(m) / d,
                   "cyclotomic_factors_mod_p: wrong factor count");
    std::sort(factors.begin(), factors.end());

    // product must reproduce Phi_m mod p
    gfp::Poly prod{1};
    for (const auto& g : factors) prod = gfp::poly_mul(prod, g, p);
    const auto& phi_m = cyclotomic_polynomial(m);
    gfp::Poly phi_red(phi_m.size());
    for (std::size_t i = 0; i < phi_m.size(); ++i)
        phi_red[i] = static_cast<u64>(((phi_m[i] % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
    internal_check(gfp::poly_trim(std::move(phi_red)) == prod,
                   "cyclotomic_factors_mod_p: factor product mismatch");
    return factors;
}

unsigned residue_factor_count(u64 n, u64 p) {
    u64 np = n;
    while (np % p == 0) np /= p;
    if (np <= 2) return 1;
    u64 d = numtheory::multiplicative_order(p % np, np);
    return static_cast<unsigned>(euler_phi(np) / d);
}

ResidueMap residue_map(u64 n, u64 p, unsigned factor_index) {
    require(n >= 1, "residue_map: conductor >= 1");
    require(numtheory::is_prime(p), "residue_map: p must be prime");
    ResidueMap rm;
    rm.conductor = n;
    rm.p = p;
    u64 np = n;
    u64 pa = 1;
    while (np % p == 0) {
        np /= p;
        pa *= p;
    }
    rm.np = np;
    auto factors = cyclotomic_factors_mod_p(np, p);
    rm.modulus = factors[factor_index % factors.size()];
    rm.degree = static_cast<unsigned>(rm.modulus.size()) - 1;
    rm.field = std::make_shared<gfp::Fq>(p, rm.modulus);
    if (np == 1) {
        rm.zeta_exp = 0;
    } else {
        // zeta_n maps to xbar^t with t * p^a == 1 (mod np), so the p-part of
        // zeta_n goes to 1 and the np-part goes to a root of the modulus
        u64 pam = pa % np;
        u64 t = 1;
        if (pam != 1) {
            u64 ord = numtheory::multiplicative_order(pam, np);
            t = numtheory::powmod(pam, ord - 1, np);
        }
        rm.zeta_exp = t;
    }
    return rm;
}

gfp::Fq::Elem reduce_mod(const Cyc& a, const ResidueMap& m) {
    require(m.conductor % a.conductor == 0, "reduce: conductor must divide the map's conductor");
    const gfp::Fq& F = *m.field;
    u64 step;
    if (m.np == 1) {
        step = 0;
    } else {
        u64 ratio = (m.conductor / a.conductor) % m.np;
        step = static_cast<u64>((static_cast<unsigned __int128>(m.zeta_exp) * ratio) % m.np);
    }
    auto xi = F.pow(F.gen(), mpz_class(static_cast<unsigned long>(step)));
    auto acc = F.zero();
    i64 p = static_cast<i64>(m.p);
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        acc = F.mul(acc, xi);
        i64 c = ((a.coeffs[i] % p) + p) % p;
        acc = F.add(acc, F.from_int(static_cast<u64>(c)));
    }
    return acc;
}

} // namespace blockdeg::cyclo
