#pragma once

#include <string>
#include <vector>

#include "blockdeg/permgroup.hpp"

namespace blockdeg::fixtures {

using permgroup::PermutationGroup;

PermutationGroup cyclic_group(unsigned n);
PermutationGroup symmetric_group(unsigned n);
PermutationGroup alternating_group(unsigned n);

// PSL_2(q) acting on the projective line (q+1 points); equals SL_2(q) for
// even q. Generators: unit translations by a field basis and x -> -1/x.
// The constructed order is checked against q(q^2-1)/gcd(2, q-1).
PermutationGroup psl2_group(std::uint64_t q);

// PSp_4(3) on the 40 points of PG(3,3), generated by symplectic transvections.
PermutationGroup psp4_3_group();

// Resolves "A5", "S4", "C6", "PSL2(7)", "SL2(8)", "PSp4(3)", ... or falls back
// to reading a generator file at the given path.
PermutationGroup resolve_group(const std::string& name_or_path);

std::vector<std::string> builtin_names();

} // namespace blockdeg::fixtures
