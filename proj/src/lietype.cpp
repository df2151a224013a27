#include "blockdeg/lietype.hpp"

#include <numeric>

#include "blockdeg/numtheory.hpp"

namespace blockdeg::lietype {

namespace {

mpz_class pow_ui(u64 base, u64 e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

} // namespace

FamilySpec make_family(Family f, unsigned n, u64 q) {
    auto pp = numtheory::is_prime_power(q);
    require(pp.has_value(), "family: q must be a prime power");
    switch (f) {
        case Family::PSL:
        case Family::PSU:
            require(n >= 2, "family: rank n >= 2 for PSL/PSU");
            if (n == 2) require(q >= 4, "family: PSL_2(q) is simple only for q >= 4");
            if (f == Family::PSU && n == 3)
                require(q >= 3, "family: PSU_3(2) is not simple");
            break;
        case Family::PSp:
            require(n >= 2, "family: PSp_{2n} needs n >= 2");
            break;
        case Family::SL2even:
            require(pp->prime == 2 && q >= 4, "family: SL2even needs q = 2^k >= 4");
            break;
    }
    return FamilySpec{f, n, q};
}

std::string family_name(const FamilySpec& f) {
    switch (f.family) {
        case Family::PSL: return "PSL" + std::to_string(f.n) + "(" + std::to_string(f.q) + ")";
        case Family::PSU: return "PSU" + std::to_string(f.n) + "(" + std::to_string(f.q) + ")";
        case Family::PSp:
            return "PSp" + std::to_string(2 * f.n) + "(" + std::to_string(f.q) + ")";
        case Family::SL2even: return "SL2(" + std::to_string(f.q) + ")";
    }
    return "?";
}

u64 defining_characteristic(const FamilySpec& f) {
    return numtheory::is_prime_power(f.q)->prime;
}

mpz_class group_order(const FamilySpec& f) {
    switch (f.family) {
        case Family::PSL: {
            mpz_class o = pow_ui(f.q, static_cast<u64>(f.n) * (f.n - 1) / 2);
            for (unsigned i = 2; i <= f.n; ++i) o *= pow_ui(f.q, i) - 1;
            mpz_class g = std::gcd(static_cast<u64>(f.n), f.q - 1);
            internal_check(o % g == 0, "group_order: non-exact center quotient");
            return o / g;
        }
        case Family::PSU: {
            mpz_class o = pow_ui(f.q, static_cast<u64>(f.n) * (f.n - 1) / 2);
            for (unsigned i = 2; i <= f.n; ++i) {
                mpz_class t = pow_ui(f.q, i);
                if (i % 2 == 0) t -= 1; else t += 1;
                o *= t;
            }
            mpz_class g = std::gcd(static_cast<u64>(f.n), f.q + 1);
            internal_check(o % g == 0, "group_order: non-exact center quotient");
            return o / g;
        }
        case Family::PSp: {
            mpz_class o = pow_ui(f.q, static_cast<u64>(f.n) * f.n);
            for (unsigned i = 1; i <= f.n; ++i) o *= pow_ui(f.q, 2 * i) - 1;
            return o / (f.q % 2 == 0 ? 1 : 2);
        }
        case Family::SL2even:
            return mpz_class(static_cast<unsigned long>(f.q)) * (pow_ui(f.q, 2) - 1);
    }
    throw std::invalid_argument("group_order: unknown family");
}

mpz_class steinberg_degree(const FamilySpec& f) {
    switch (f.family) {
        case Family::PSL:
        case Family::PSU: return pow_ui(f.q, static_cast<u64>(f.n) * (f.n - 1) / 2);
        case Family::PSp: return pow_ui(f.q, static_cast<u64>(f.n) * f.n);
        case Family::SL2even: return mpz_class(static_cast<unsigned long>(f.q));
    }
    throw std::invalid_argument("steinberg_degree: unknown family");
}

std::set<u64> psl2_degree_set(u64 q) {
    require(q >= 4 && numtheory::is_prime_power(q).has_value(),
            "psl2_degree_set: q must be a prime power >= 4");
    std::set<u64> out{1, q};
    if (q % 2 == 0) {
        out.insert(q - 1);
        out.insert(q + 1);
        return out;
    }
    u64 half = q % 4 == 1 ? (q + 1) / 2 : (q - 1) / 2;
    out.insert(half);
    u64 count_qm1 = q % 4 == 1 ? (q - 1) / 4 : (q - 3) / 4;
    u64 count_qp1 = q % 4 == 1 ? (q - 5) / 4 : (q - 3) / 4;
    if (count_qm1 > 0) out.insert(q - 1);
    if (count_qp1 > 0) out.insert(q + 1);
    return out;
}

std::set<u64> psl2_b0_upper(u64 q, u64 p) {
    require(numtheory::is_prime(p), "psl2_b0_upper: p must be prime");
    mpz_class order = mpz_class(static_cast<unsigned long>(q)) * (q - 1) * (q + 1);
    if (q % 2 == 1) order /= 2;
    require(mpz_divisible_ui_p(order.get_mpz_t(), p), "psl2_b0_upper: p must divide |PSL2(q)|");
    unsigned vg = numtheory::valuation(order, p);
    std::set<u64> out;
    for (u64 d : psl2_degree_set(q))
        if (numtheory::valuation(d, p) != vg) out.insert(d);
    return out;
}

std::set<u64> defining_char_b0(const FamilySpec& f) {
    bool psl2_like = f.family == Family::SL2even || (f.family == Family::PSL && f.n == 2) ||
                     (f.family == Family::PSU && f.n == 2);
    require(psl2_like, "defining_char_b0: implemented for the PSL_2/SL_2 families only");
    auto out = psl2_degree_set(f.q);
    out.erase(f.q);
    return out;
}

Psl3Degrees psl3_prime_power_degrees(u64 q, int epsilon) {
    require(epsilon == 1 || epsilon == -1, "psl3_prime_power_degrees: epsilon must be +-1");
    require(q >= 2 && numtheory::is_prime_power(q).has_value(),
            "psl3_prime_power_degrees: q must be a prime power");
    Psl3Degrees out;
    out.steinberg = pow_ui(q, 3);
    mpz_class q3 = pow_ui(q, 3);
    mpz_class num = q3;
    mpz_class den = static_cast<unsigned long>(q);
    if (epsilon == 1) { num -= 1; den -= 1; } else { num += 1; den += 1; }
    internal_check(num % den == 0, "psl3_prime_power_degrees: non-exact series degree");
    out.series = num / den;
    out.series_power_of_two =
        out.series > 1 && mpz_popcount(out.series.get_mpz_t()) == 1;
    return out;
}

} // namespace blockdeg::lietype
