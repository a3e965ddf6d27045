#pragma once

#include <cstdint>

namespace anyd {

// splitmix64 (Vigna's fixed-increment SplittableRandom). Fully pinned so
// independent implementations reproduce the same benchmark lattices
// bit-for-bit: state advances by the golden-gamma constant, output is two
// xorshift-multiply rounds, and next_unit() maps the top 53 bits to [0,1).
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class Distribution { UniformUnit };

struct RngSpec {
    uint64_t seed = 0;
    Distribution distribution = Distribution::UniformUnit;
};

} // namespace anyd
