#pragma once

#include <cstdint>

namespace cheeger_lab {

// SplitMix64 (Steele-Lea-Flood); the one documented generator used for all
// seeded fixtures so instances are portable across implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound > 0. Simple modulo; the tiny bias is
    // irrelevant for instance generation and keeps the algorithm trivially
    // portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() {  // [0,1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

}  // namespace cheeger_lab
