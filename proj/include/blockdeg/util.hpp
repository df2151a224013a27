#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace blockdeg {

// Thrown when an internal self-check fails (orthogonality, exact division,
// eigenvalue consistency, ...). A caller never receives unverified output.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) throw verification_error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Deterministic 64-bit PRNG used wherever an algorithm needs "random" probes
// (equal-degree splitting, eigenspace fallback). Outputs depend only on the seed.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Opt-in worker count for the parallelizable stages (class matrices, value
// lifting). Results are identical for every setting.
void set_thread_count(unsigned n);
unsigned thread_count();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace blockdeg
