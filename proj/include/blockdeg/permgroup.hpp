#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "blockdeg/util.hpp"

namespace blockdeg::permgroup {

using u64 = std::uint64_t;

// image vector, 0-based points
using Perm = std::vector<std::uint16_t>;

Perm perm_identity(unsigned degree);
bool perm_is_identity(const Perm& a);
Perm perm_mul(const Perm& a, const Perm& b); // apply a, then b
Perm perm_inverse(const Perm& a);
Perm perm_pow(const Perm& a, long long e);
u64 perm_order(const Perm& a);
Perm perm_conj(const Perm& x, const Perm& g); // g^{-1} x g

std::string perm_to_cycles(const Perm& a);                    // 1-based, "()" for identity
Perm perm_from_cycles(const std::string& s, unsigned degree); // parses "(1,2,3)(4,5)"

struct PermHash {
    std::size_t operator()(const Perm& a) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : a) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct StabChain; // opaque

struct PermutationGroup {
    unsigned degree = 0;
    std::vector<Perm> generators;

    const StabChain& chain() const; // built once, cached
    mpz_class order() const;

  private:
    mutable std::shared_ptr<StabChain> chain_;
};

PermutationGroup make_group(unsigned degree, std::vector<Perm> generators);
mpz_class group_order(const PermutationGroup& g);

// Input format: a `degree: d` line, then `gen: (1,2,3)(4,5)` lines;
// blank lines and `#` comments ignored.
PermutationGroup parse_group_stream(std::istream& in);
PermutationGroup parse_group_file(const std::string& path);
std::string format_group(const PermutationGroup& g);

constexpr u64 kDefaultEnumerationBound = 1'000'000;

// Full class decomposition from element enumeration (bounded). Class 0 is the
// identity class; representatives are the least members in lexicographic
// order on image tuples, and classes are indexed by their representatives.
struct ClassData {
    unsigned degree = 0;
    u64 group_order = 0;
    std::vector<Perm> elements;          // all of G, sorted
    std::vector<std::uint32_t> class_of; // aligned with elements
    std::vector<std::uint32_t> representative; // element index per class
    std::vector<u64> sizes;
    std::vector<u64> orders;
    std::vector<std::uint32_t> inverse_map;
    std::map<u64, std::vector<std::uint32_t>> power_maps; // prime m | exponent
    std::vector<std::vector<std::uint32_t>> members;      // element indices per class

    std::unordered_map<Perm, std::uint32_t, PermHash> index_of;

    unsigned num_classes() const { return static_cast<unsigned>(sizes.size()); }
    std::uint32_t element_index(const Perm& x) const;
    std::uint32_t class_of_perm(const Perm& x) const;
    const Perm& rep(unsigned k) const { return elements[representative[k]]; }
    // class of rep(k)^t
    std::uint32_t power_class(unsigned k, u64 t) const;
};

ClassData conjugacy_classes(const PermutationGroup& g, u64 bound = kDefaultEnumerationBound);

u64 exponent(const ClassData& cd);

// c_{ijk} = #{(x, y) in K_i x K_j : xy = z} for fixed z in K_k
std::vector<u64> class_mult_coeffs(const ClassData& cd, unsigned i, unsigned j);

// full matrix for class i: M[j][k] = c_{ijk}
std::vector<std::vector<u64>> class_matrix(const ClassData& cd, unsigned i);

} // namespace blockdeg::permgroup
