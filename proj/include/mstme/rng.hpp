#pragma once

#include <cstdint>
#include <random>

namespace mstme {

/// mt19937_64 behind a fixed [0,1) mapping. Both the engine and
/// std::seed_seq are pinned by the standard, so identical seeds give
/// identical streams on every platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) {
        std::seed_seq seq{low32(seed), high32(seed)};
        engine_.seed(seq);
    }

    /// Independent child stream, e.g. one per (noise level, trial) pair.
    static DeterministicRng child(std::uint64_t seed, std::uint32_t a, std::uint32_t b) {
        std::seed_seq seq{low32(seed), high32(seed), a, b};
        return DeterministicRng(seq);
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0,1), using the top 53 bits of the engine output.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    explicit DeterministicRng(std::seed_seq& seq) { engine_.seed(seq); }

    static std::uint32_t low32(std::uint64_t s) { return static_cast<std::uint32_t>(s); }
    static std::uint32_t high32(std::uint64_t s) { return static_cast<std::uint32_t>(s >> 32); }

    std::mt19937_64 engine_;
};

}  // namespace mstme
