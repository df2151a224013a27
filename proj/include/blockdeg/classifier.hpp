#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockdeg/blocks.hpp"
#include "blockdeg/lietype.hpp"

namespace blockdeg::classifier {

using u64 = std::uint64_t;

enum class Method { ClosedForm, Oracle, Both };

struct PairVerdict {
    std::string group; // canonical label (exceptional isomorphisms folded)
    std::optional<lietype::FamilySpec> spec;
    u64 p = 2;
    bool accepted = false;
    std::vector<u64> cd_b0; // degree set the verdict is based on (sorted)
    std::string method;     // "closed-form" | "oracle" | "both"
    std::vector<u64> prime_divisors;
    std::optional<std::string> theorem_a_case; // "(i)".."(v)"
};

// union of prime divisors of the entries (1 contributes nothing)
std::vector<u64> prime_count(const std::vector<u64>& cd);

// Closed-form acceptance is sound (an all-prime-power superset certifies the
// hypothesis); closed-form rejection is not, so an inconclusive upper bound
// with method=ClosedForm raises invalid_argument instead of guessing.
PairVerdict verify_pair(const lietype::FamilySpec& spec, u64 p, Method method,
                        u64 bound = permgroup::kDefaultEnumerationBound);

// Oracle check of the Theorem B hypothesis on an explicit group; asserts the
// Corollary C bound (at most 3 primes) whenever the verdict is accepted.
PairVerdict hypothesis_check(const permgroup::PermutationGroup& g, const std::string& name,
                             u64 p, u64 bound = permgroup::kDefaultEnumerationBound);

struct TheoremAPair {
    std::string group;
    u64 p;
    std::string theorem_a_case;
    bool operator==(const TheoremAPair&) const = default;
};

// The statement of Theorem A restricted to q <= qmax, with the exceptional
// isomorphisms reported once: A5 under (iv), A6 under (v), SL2(8) under (iii).
std::vector<TheoremAPair> theorem_a_expected(u64 qmax);

struct ScanOptions {
    u64 qmax = 9;
    bool oracle = false;
    u64 bound = permgroup::kDefaultEnumerationBound;
};

// Enumerates the Theorem A candidates up to qmax, verifies each pair by
// closed form (plus oracle when requested and within bound), and asserts the
// exactly-two-primes claim. Throws verification_error on any failure.
std::vector<PairVerdict> scan_theorem_a(const ScanOptions& opts);

} // namespace blockdeg::classifier
