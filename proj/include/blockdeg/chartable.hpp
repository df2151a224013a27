#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "blockdeg/cyclotomic.hpp"
#include "blockdeg/permgroup.hpp"

namespace blockdeg::chartable {

using u64 = std::uint64_t;

struct CharTableOptions {
    u64 bound = permgroup::kDefaultEnumerationBound;
    unsigned prime_offset = 0; // 0 = least admissible Dixon prime, 1 = the next, ...
};

// Exact ordinary character table. Rows are sorted canonically: the trivial
// character first, then by degree, then by value vectors (cyc_cmp per class).
// Every value is a cyclotomic integer whose conductor is the order of the
// class representative (hence divides the exponent).
struct CharacterTable {
    std::shared_ptr<const permgroup::ClassData> classes;
    u64 order = 1;
    u64 exponent = 1; // conductor of the table
    u64 dixon_prime = 0;
    std::vector<u64> degrees;
    std::vector<std::vector<cyclo::Cyc>> values;
    // multiplicity of zeta_{o_k}^j among the eigenvalues at class k; the
    // root-count form of `values`, kept for exact orthogonality sums
    std::vector<std::vector<std::vector<long long>>> root_counts;

    unsigned num_chars() const { return static_cast<unsigned>(degrees.size()); }
};

CharacterTable character_table(const permgroup::PermutationGroup& g,
                               const CharTableOptions& opts = {});

std::vector<u64> degree_set(const CharacterTable& t); // sorted, deduplicated

// Exact inner product sum_k |K_k| chi(g_k) conj(psi(g_k)); |G| * delta for
// rows of a valid table.
cyclo::Cyc row_inner_product(const CharacterTable& t, unsigned chi, unsigned psi);

} // namespace blockdeg::chartable
