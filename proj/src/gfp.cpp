#include "blockdeg/gfp.hpp"

#include <algorithm>

#include "blockdeg/numtheory.hpp"

namespace blockdeg::gfp {

using numtheory::mulmod;
using numtheory::powmod;

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_add(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    return poly_trim(std::move(r));
}

// quotient and remainder; b nonzero
static void poly_divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
    internal_check(!b.empty(), "poly_divrem: division by zero polynomial");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    u64 inv = powmod(b.back(), p - 2, p);
    while (r.size() >= b.size()) {
        u64 c = mulmod(r.back(), inv, p);
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        if (c != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                r[shift + i] = (r[shift + i] + p - mulmod(c, b[i], p)) % p;
        r.pop_back();
        r = poly_trim(std::move(r));
        if (r.size() < b.size()) break;
    }
    q = poly_trim(std::move(q));
    r = poly_trim(std::move(r));
}

Poly poly_rem(const Poly& a, const Poly& b, u64 p) {
    Poly q, r;
    poly_divrem(a, b, p, q, r);
    return r;
}

Poly poly_monic(const Poly& a, u64 p) {
    if (a.empty()) return a;
    Poly r = a;
    u64 inv = powmod(r.back(), p - 2, p);
    for (auto& c : r) c = mulmod(c, inv, p);
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : poly_monic(a, p);
}

Poly poly_powmod(const Poly& base, const mpz_class& e, const Poly& mod, u64 p) {
    Poly result{1};
    Poly b = poly_rem(base, mod, p);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = poly_rem(poly_mul(result, b, p), mod, p);
        k >>= 1;
        if (k > 0) b = poly_rem(poly_mul(b, b, p), mod, p);
    }
    return result;
}

u64 poly_eval(const Poly& f, u64 x, u64 p) {
    u64 acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
    return acc;
}

bool poly_irreducible(const Poly& f, u64 p) {
    if (f.size() < 2) return false;
    unsigned d = static_cast<unsigned>(f.size()) - 1;
    if (d == 1) return true;
    Poly x{0, 1};
    // x^(p^d) == x mod f, and gcd(x^(p^(d/r)) - x, f) = 1 for primes r | d.
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), d);
    Poly xp = poly_powmod(x, pd, f, p);
    if (!poly_sub(xp, x, p).empty()) return false;
    for (u64 r : numtheory::prime_divisors(d)) {
        mpz_class sub;
        mpz_ui_pow_ui(sub.get_mpz_t(), static_cast<unsigned long>(p), d / r);
        Poly xs = poly_powmod(x, sub, f, p);
        Poly g = poly_gcd(f, poly_sub(xs, x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly find_irreducible(u64 p, unsigned deg) {
    require(deg >= 1, "find_irreducible: degree >= 1");
    if (deg == 1) return Poly{0, 1}; // x itself
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(p), deg);
    for (mpz_class v = 0; v < total; ++v) {
        Poly f(deg + 1, 0);
        mpz_class t = v;
        for (unsigned i = 0; i < deg; ++i) {
            f[i] = mpz_class(t % static_cast<unsigned long>(p)).get_ui();
            t /= static_cast<unsigned long>(p);
        }
        f[deg] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw verification_error("find_irreducible: exhausted search space");
}

std::vector<u64> poly_roots(const Poly& f_in, u64 p, u64 seed) {
    require(p >= 3, "poly_roots: p must be an odd prime");
    std::vector<u64> out;
    Poly f = poly_trim(f_in);
    if (f.size() <= 1) return out;
    f = poly_monic(f, p);
    // distinct roots in F_p: gcd(f, x^p - x)
    Poly x{0, 1};
    Poly xp = poly_powmod(x, mpz_class(static_cast<unsigned long>(p)), f, p);
    Poly lin = poly_gcd(f, poly_sub(xp, x, p), p);
    SplitMix64 rng(seed);
    std::vector<Poly> stack{std::move(lin)};
    while (!stack.empty()) {
        Poly g = std::move(stack.back());
        stack.pop_back();
        if (g.size() <= 1) continue;
        if (g.size() == 2) {
            out.push_back((p - g[0] % p) % p);
            continue;
        }
        for (;;) {
            u64 a = rng.below(p);
            // gcd((x + a)^((p-1)/2) - 1, g) cuts the root set in two
            Poly probe = poly_powmod(Poly{a, 1}, mpz_class((p - 1) / 2), g, p);
            if (probe.empty())
                probe = Poly{p - 1};
            else
                probe[0] = (probe[0] + p - 1) % p;
            Poly h = poly_gcd(g, poly_trim(std::move(probe)), p);
            if (h.size() > 1 && h.size() < g.size()) {
                Poly q, r;
                poly_divrem(g, h, p, q, r);
                internal_check(r.empty(), "poly_roots: non-exact split");
                stack.push_back(std::move(h));
                stack.push_back(std::move(q));
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Fq::Fq(u64 p_, Poly modulus_) : p(p_), modulus(std::move(modulus_)) {
    require(!modulus.empty() && modulus.back() == 1, "Fq: modulus must be monic");
    d = static_cast<unsigned>(modulus.size()) - 1;
    require(d >= 1, "Fq: modulus degree >= 1");
}

Fq::Elem Fq::one() const {
    Elem e(d, 0);
    e[0] = 1 % p;
    return e;
}

Fq::Elem Fq::gen() const {
    Elem e(d, 0);
    if (d == 1) {
        // x == -c0 modulo the linear modulus x + c0
        e[0] = (p - modulus[0] % p) % p;
    } else {
        e[1] = 1;
    }
    return e;
}

Fq::Elem Fq::from_int(u64 v) const {
    Elem e(d, 0);
    e[0] = v % p;
    return e;
}

Fq::Elem Fq::from_poly(const Poly& f) const {
    Poly r = poly_rem(f, modulus, p);
    Elem e(d, 0);
    for (std::size_t i = 0; i < r.size(); ++i) e[i] = r[i];
    return e;
}

bool Fq::is_zero(const Elem& a) const {
    for (u64 c : a)
        if (c != 0) return false;
    return true;
}

Fq::Elem Fq::add(const Elem& a, const Elem& b) const {
    Elem r(d, 0);
    for (unsigned i = 0; i < d; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

Fq::Elem Fq::sub(const Elem& a, const Elem& b) const {
    Elem r(d, 0);
    for (unsigned i = 0; i < d; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
}

Fq::Elem Fq::mul(const Elem& a, const Elem& b) const {
    std::vector<u64> conv(2 * static_cast<std::size_t>(d) - 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j)
            conv[i + j] = (conv[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    for (std::size_t k = conv.size(); k-- > d;) {
        u64 c = conv[k];
        if (c != 0)
            for (unsigned i = 0; i < d; ++i)
                conv[k - d + i] = (conv[k - d + i] + p - mulmod(c, modulus[i], p)) % p;
        conv[k] = 0;
    }
    Elem r(d, 0);
    for (unsigned i = 0; i < d; ++i) r[i] = conv[i];
    return r;
}

Fq::Elem Fq::pow(Elem a, mpz_class e) const {
    Elem r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
        e >>= 1;
        if (e > 0) a = mul(a, a);
    }
    return r;
}

mpz_class Fq::order() const {
    mpz_class o;
    mpz_ui_pow_ui(o.get_mpz_t(), static_cast<unsigned long>(p), d);
    return o;
}

} // namespace blockdeg::gfp
