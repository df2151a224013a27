#include "blockdeg/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "blockdeg/gfp.hpp"
#include "blockdeg/numtheory.hpp"

namespace blockdeg::fixtures {

using permgroup::Perm;
using permgroup::make_group;
using u64 = std::uint64_t;

PermutationGroup cyclic_group(unsigned n) {
    require(n >= 1, "cyclic_group: n >= 1");
    Perm c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
    return make_group(n, {c});
}

PermutationGroup symmetric_group(unsigned n) {
    require(n >= 2, "symmetric_group: n >= 2");
    Perm cycle(n), swap01 = permgroup::perm_identity(n);
    for (unsigned i = 0; i < n; ++i) cycle[i] = static_cast<std::uint16_t>((i + 1) % n);
    swap01[0] = 1;
    swap01[1] = 0;
    return make_group(n, {swap01, cycle});
}

PermutationGroup alternating_group(unsigned n) {
    require(n >= 3, "alternating_group: n >= 3");
    Perm three = permgroup::perm_identity(n);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (n % 2 == 1) {
        Perm cycle(n);
        for (unsigned i = 0; i < n; ++i) cycle[i] = static_cast<std::uint16_t>((i + 1) % n);
        return make_group(n, {three, cycle});
    }
    Perm cycle = permgroup::perm_identity(n); // (2,3,...,n)
    for (unsigned i = 1; i < n; ++i) cycle[i] = static_cast<std::uint16_t>(i + 1 == n ? 1 : i + 1);
    return make_group(n, {three, cycle});
}

PermutationGroup psl2_group(u64 q) {
    auto pp = numtheory::is_prime_power(q);
    require(pp && q >= 4 && q <= 8192, "psl2_group: q must be a prime power in [4, 8192]");
    u64 p = pp->prime;
    unsigned f = pp->exponent;
    gfp::Fq F(p, gfp::find_irreducible(p, f));

    // field elements indexed by base-p digit encoding; q = infinity
    auto encode = [&](const gfp::Fq::Elem& e) {
        u64 v = 0;
        for (unsigned i = F.d; i-- > 0;) v = v * p + e[i];
        return v;
    };
    auto decode = [&](u64 v) {
        gfp::Fq::Elem e(F.d, 0);
        for (unsigned i = 0; i < F.d; ++i) {
            e[i] = v % p;
            v /= p;
        }
        return e;
    };
    unsigned deg = static_cast<unsigned>(q) + 1;
    const u64 INF = q;

    auto perm_of = [&](auto&& fn) {
        Perm out(deg);
        for (u64 i = 0; i <= q; ++i) out[i] = static_cast<std::uint16_t>(fn(i));
        return out;
    };

    std::vector<Perm> gens;
    // translations x -> x + b for b running over a field basis
    for (unsigned i = 0; i < f; ++i) {
        gfp::Fq::Elem b(F.d, 0);
        b[i] = 1;
        gens.push_back(perm_of([&](u64 pt) {
            if (pt == INF) return INF;
            return encode(F.add(decode(pt), b));
        }));
    }
    // Weyl element x -> -1/x
    mpz_class inv_exp = F.order() - 2;
    gens.push_back(perm_of([&](u64 pt) -> u64 {
        if (pt == INF) return 0;
        if (pt == 0) return INF;
        auto inv = F.pow(decode(pt), inv_exp);
        auto neg = F.sub(F.zero(), inv);
        return encode(neg);
    }));

    auto g = make_group(deg, std::move(gens));
    mpz_class expect = mpz_class(static_cast<unsigned long>(q)) * (q - 1) * (q + 1);
    if (q % 2 == 1) expect /= 2;
    internal_check(g.order() == expect, "psl2_group: unexpected group order");
    return g;
}

PermutationGroup psp4_3_group() {
    constexpr unsigned P = 3;
    using Vec = std::array<unsigned, 4>;
    // symplectic form on basis e1, e2, f2, f1
    auto form = [](const Vec& x, const Vec& y) -> unsigned {
        int b = static_cast<int>(x[0] * y[3]) + static_cast<int>(x[1] * y[2]) -
                static_cast<int>(x[2] * y[1]) - static_cast<int>(x[3] * y[0]);
        return static_cast<unsigned>(((b % static_cast<int>(P)) + P) % P);
    };

    // canonical projective representatives: first nonzero coordinate = 1
    std::vector<Vec> points;
    auto canonical = [&](Vec v) {
        unsigned lead = 0;
        while (lead < 4 && v[lead] == 0) ++lead;
        internal_check(lead < 4, "psp4_3: zero vector");
        if (v[lead] == 2)
            for (auto& c : v) c = (2 * c) % P;
        return v;
    };
    for (unsigned a = 0; a < P; ++a)
        for (unsigned b = 0; b < P; ++b)
            for (unsigned c = 0; c < P; ++c)
                for (unsigned d = 0; d < P; ++d) {
                    Vec v{a, b, c, d};
                    if (a == 0 && b == 0 && c == 0 && d == 0) continue;
                    if (canonical(v) == v && std::find(points.begin(), points.end(), v) == points.end())
                        points.push_back(v);
                }
    internal_check(points.size() == 40, "psp4_3: expected 40 projective points");
    auto index_of = [&](const Vec& v) {
        auto it = std::find(points.begin(), points.end(), canonical(v));
        internal_check(it != points.end(), "psp4_3: point lookup failure");
        return static_cast<std::uint16_t>(it - points.begin());
    };

    // symplectic transvections x -> x + <x, v> v
    auto transvection = [&](const Vec& dir) {
        Perm out(40);
        for (unsigned i = 0; i < 40; ++i) {
            unsigned c = form(points[i], dir);
            Vec img = points[i];
            for (unsigned j = 0; j < 4; ++j) img[j] = (img[j] + c * dir[j]) % P;
            out[i] = index_of(img);
        }
        return out;
    };

    std::vector<Perm> gens;
    for (Vec dir : {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}, Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1},
                    Vec{1, 1, 0, 0}, Vec{1, 0, 1, 0}, Vec{0, 1, 1, 0}, Vec{1, 0, 0, 1}})
        gens.push_back(transvection(dir));
    auto g = make_group(40, std::move(gens));
    internal_check(g.order() == 25920, "psp4_3: unexpected group order");
    return g;
}

namespace {

bool parse_spec_name(const std::string& s, std::string& head, u64& arg) {
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') return false;
    head = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    if (inner.empty()) return false;
    for (char c : inner)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    arg = std::stoull(inner);
    return true;
}

} // namespace

PermutationGroup resolve_group(const std::string& name_or_path) {
    const std::string& s = name_or_path;
    if (!s.empty() && (s[0] == 'A' || s[0] == 'S' || s[0] == 'C') &&
        s.find_first_not_of("0123456789", 1) == std::string::npos && s.size() > 1) {
        unsigned n = static_cast<unsigned>(std::stoul(s.substr(1)));
        if (s[0] == 'A') return alternating_group(n);
        if (s[0] == 'S') return symmetric_group(n);
        return cyclic_group(n);
    }
    std::string head;
    u64 arg = 0;
    if (parse_spec_name(s, head, arg)) {
        if (head == "PSL2" || head == "SL2") {
            if (head == "SL2")
                require(arg % 2 == 0, "SL2(q) fixtures require even q; use PSL2(q) for odd q");
            return psl2_group(arg);
        }
        if (head == "PSp4" || head == "PSP4") {
            require(arg == 3, "only the PSp4(3) fixture is shipped");
            return psp4_3_group();
        }
        throw std::invalid_argument("unknown group family: " + head);
    }
    return permgroup::parse_group_file(s);
}

std::vector<std::string> builtin_names() {
    return {"A5",       "A6",     "S3",      "S4",      "S5",      "C2",      "C4",
            "C6",       "PSL2(5)", "PSL2(7)", "PSL2(9)", "PSL2(11)", "PSL2(13)", "PSL2(17)",
            "SL2(4)",   "SL2(8)", "SL2(16)", "SL2(32)", "PSp4(3)"};
}

} // namespace blockdeg::fixtures
