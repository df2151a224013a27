#pragma once

#include <cstdint>
#include <vector>

#include "blockdeg/chartable.hpp"

namespace blockdeg::blocks {

using u64 = std::uint64_t;

// omega[chi][k] = |K_k| chi(g_k) / chi(1), verified exact in Z[zeta].
std::vector<std::vector<cyclo::Cyc>> central_characters(const chartable::CharacterTable& t);

struct BlockOptions {
    unsigned factor_index = 0; // which irreducible factor of Phi mod p backs the ideal
};

struct BlockPartition {
    u64 p = 2;
    std::vector<unsigned> block_of;           // character index -> block index
    unsigned principal = 0;                   // always 0: block of the trivial character
    std::vector<unsigned> defects;            // nu_p(|G|) - nu_p(chi(1))
    std::vector<std::vector<unsigned>> blocks; // members per block, ascending

    bool operator==(const BlockPartition&) const = default;
};

BlockPartition block_partition(const chartable::CharacterTable& t, u64 p,
                               const BlockOptions& opts = {});

unsigned defect(const chartable::CharacterTable& t, unsigned chi, u64 p);

std::vector<u64> cd_b0(const chartable::CharacterTable& t, u64 p,
                       const BlockOptions& opts = {}); // sorted degree set of B_0

std::vector<u64> cd_b0(const permgroup::PermutationGroup& g, u64 p,
                       u64 bound = permgroup::kDefaultEnumerationBound);

} // namespace blockdeg::blocks
