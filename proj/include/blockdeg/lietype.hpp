#pragma once

#include <cstdint>
#include <set>
#include <string>

#include <gmpxx.h>

#include "blockdeg/util.hpp"

namespace blockdeg::lietype {

using u64 = std::uint64_t;

enum class Family { PSL, PSU, PSp, SL2even };

// A symbolic simple-group instance: PSL_n(q), PSU_n(q), PSp_{2n}(q), or
// SL_2(2^k) under its own tag. epsilon is +1 for PSL, -1 for PSU.
struct FamilySpec {
    Family family;
    unsigned n; // linear rank for PSL/PSU; half rank for PSp (the group is PSp_{2n})
    u64 q;

    int epsilon() const { return family == Family::PSU ? -1 : 1; }
    bool operator==(const FamilySpec&) const = default;
};

FamilySpec make_family(Family f, unsigned n, u64 q); // validates
std::string family_name(const FamilySpec& f);
u64 defining_characteristic(const FamilySpec& f);

mpz_class group_order(const FamilySpec& f);
mpz_class steinberg_degree(const FamilySpec& f); // the q-part of the order

// Degrees that actually occur for PSL_2(q); the generic five-element list
// degenerates at q = 5 (no q+1) and for even q (no half degrees).
std::set<u64> psl2_degree_set(u64 q);

// psl2_degree_set minus the p-defect-zero degrees: a proven superset of
// cd(B_0(PSL_2(q))) for p | |G|.
std::set<u64> psl2_b0_upper(u64 q, u64 p);

// Defining characteristic: Irr(B_0) is everything but the Steinberg character.
std::set<u64> defining_char_b0(const FamilySpec& f);

struct Psl3Degrees {
    mpz_class steinberg;      // |S|_q = q^3
    mpz_class series;         // (q^3 - eps)/(q - eps)
    bool series_power_of_two; // never true; reported, not assumed
};

Psl3Degrees psl3_prime_power_degrees(u64 q, int epsilon);

} // namespace blockdeg::lietype
