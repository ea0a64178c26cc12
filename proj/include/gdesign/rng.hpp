#pragma once

#include <cstdint>

namespace gdesign {

// splitmix64: the documented, fixed RNG behind every seeded heuristic, so
// identical seeds reproduce identical runs on any platform
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform-enough draw in [0, m); modulo bias is irrelevant at m <= 64
    std::uint64_t below(std::uint64_t m) { return next() % m; }

    bool coin() { return next() & 1ULL; }

private:
    std::uint64_t state_;
};

}  // namespace gdesign
