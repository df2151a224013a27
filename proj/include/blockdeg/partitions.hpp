#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "blockdeg/util.hpp"

namespace blockdeg::partitions {

using u64 = std::uint64_t;

// weakly decreasing positive parts; empty partition allowed
struct Partition {
    std::vector<u64> parts;
    Partition() = default;
    explicit Partition(std::vector<u64> p);
    u64 size() const;
    bool operator==(const Partition&) const = default;
};

Partition parse_partition(const std::string& s); // "3,1,1" or "()" for empty
std::string partition_to_string(const Partition& p);

std::vector<Partition> partitions_of(u64 n); // all partitions, lexicographically descending order

std::vector<u64> hook_lengths(const Partition& p); // sorted descending

// beta-set (first-column hook lengths) with a given number of beads >= #parts
std::vector<u64> beta_set(const Partition& p, u64 beads);
Partition partition_from_beta(std::vector<u64> beta);

Partition e_core(const Partition& p, u64 e); // abacus bead sliding
u64 e_weight(const Partition& p, u64 e);     // number of removed e-hooks

struct BlockParamsA {
    u64 e = 1; // order of (epsilon q) mod p
    u64 r = 0; // remainder of n mod e
};

BlockParamsA block_params_A(u64 n, u64 q, u64 p, int epsilon);

// Fong-Srinivasan criterion: the unipotent character labeled by `p` lies in
// the principal block iff its e-core is the one-row partition (r).
bool in_principal_block_A(const Partition& p, const BlockParamsA& bp);

// q-analog hook length formula for type A (epsilon = +1) and its Ennola
// evaluation at -q for type 2A (epsilon = -1); always an exact integer.
mpz_class unipotent_degree_A(const Partition& p, u64 q, int epsilon);

// defect-1 symbol labeling a type B/C unipotent character
struct SymbolC {
    std::vector<u64> top;    // strictly increasing
    std::vector<u64> bottom; // strictly increasing
    SymbolC(std::vector<u64> t, std::vector<u64> b);
    unsigned defect() const;
    u64 rank() const;
    SymbolC reduced() const; // strip common 0-shifts
    bool operator==(const SymbolC&) const = default;
};

mpz_class unipotent_degree_C(const SymbolC& s, u64 n, u64 q);

} // namespace blockdeg::partitions
