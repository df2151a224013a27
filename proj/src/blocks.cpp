#include "blockdeg/blocks.hpp"

#include <algorithm>
#include <map>

#include "blockdeg/numtheory.hpp"

namespace blockdeg::blocks {

std::vector<std::vector<cyclo::Cyc>> central_characters(const chartable::CharacterTable& t) {
    const auto& cd = *t.classes;
    unsigned r = cd.num_classes();
    std::vector<std::vector<cyclo::Cyc>> omega(r, std::vector<cyclo::Cyc>(r));
    parallel_for(r, [&](std::size_t c) {
        for (unsigned k = 0; k < r; ++k) {
            auto scaled = cyclo::cyc_scale(t.values[c][k], static_cast<long long>(cd.sizes[k]));
            omega[c][k] = cyclo::cyc_divexact(scaled, static_cast<long long>(t.degrees[c]));
        }
    });
    return omega;
}

BlockPartition block_partition(const chartable::CharacterTable& t, u64 p,
                               const BlockOptions& opts) {
    require(numtheory::is_prime(p), "block_partition: p must be prime");
    const auto& cd = *t.classes;
    unsigned r = cd.num_classes();
    BlockPartition bp;
    bp.p = p;
    bp.defects.resize(r);
    unsigned vg = numtheory::valuation(t.order, p);
    for (unsigned c = 0; c < r; ++c) bp.defects[c] = vg - numtheory::valuation(t.degrees[c], p);

    bp.block_of.resize(r);
    if (t.order % p != 0) {
        // Maschke case: every character is its own block
        for (unsigned c = 0; c < r; ++c) {
            bp.block_of[c] = c;
            bp.blocks.push_back({c});
        }
        bp.principal = 0;
        return bp;
    }

    auto omega = central_characters(t);
    auto rm = cyclo::residue_map(t.exponent, p, opts.factor_index);
    // residue row of each character; equal rows share a block
    std::map<std::vector<u64>, unsigned> block_ids;
    for (unsigned c = 0; c < r; ++c) {
        std::vector<u64> row;
        row.reserve(static_cast<std::size_t>(r) * rm.degree);
        for (unsigned k = 0; k < r; ++k) {
            auto img = cyclo::reduce_mod(omega[c][k], rm);
            row.insert(row.end(), img.begin(), img.end());
        }
        auto [it, fresh] = block_ids.emplace(std::move(row), static_cast<unsigned>(bp.blocks.size()));
        if (fresh) bp.blocks.emplace_back();
        bp.block_of[c] = it->second;
        bp.blocks[it->second].push_back(c);
    }
    bp.principal = bp.block_of[0];
    internal_check(bp.principal == 0, "block_partition: trivial character not in block 0");

    // defect-zero characters must be alone in their block
    for (unsigned c = 0; c < r; ++c)
        if (bp.defects[c] == 0)
            internal_check(bp.blocks[bp.block_of[c]].size() == 1,
                           "block_partition: defect-zero character shares a block");
    return bp;
}

unsigned defect(const chartable::CharacterTable& t, unsigned chi, u64 p) {
    require(chi < t.num_chars(), "defect: character index out of range");
    return numtheory::valuation(t.order, p) - numtheory::valuation(t.degrees[chi], p);
}

std::vector<u64> cd_b0(const chartable::CharacterTable& t, u64 p, const BlockOptions& opts) {
    auto bp = block_partition(t, p, opts);
    std::vector<u64> out;
    for (unsigned c : bp.blocks[bp.principal]) out.push_back(t.degrees[c]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<u64> cd_b0(const permgroup::PermutationGroup& g, u64 p, u64 bound) {
    chartable::CharTableOptions opts;
    opts.bound = bound;
    auto t = chartable::character_table(g, opts);
    return cd_b0(t, p);
}

} // namespace blockdeg::blocks
