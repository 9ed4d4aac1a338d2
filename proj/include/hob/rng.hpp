#pragma once

#include <cstdint>

namespace hob {

// splitmix64. Self-contained so seeded runs emit identical bytes on every
// platform (std::uniform_int_distribution is implementation-defined).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] by rejection.
    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return lo + static_cast<long long>(x % span);
    }

    bool chance(long long num, long long den) { return range(1, den) <= num; }
};

} // namespace hob
