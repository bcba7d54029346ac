#pragma once

#include <cstdint>

namespace netredist {

// Minimal deterministic generator (splitmix64). std::mt19937 with the
// standard distributions is avoided on purpose: distribution output is not
// pinned down by the standard, and byte-identical reruns across toolchains
// are part of this project's contract.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound >= 1 (Lemire rejection, no modulo bias)
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            __uint128_t m = static_cast<__uint128_t>(next()) * bound;
            if (static_cast<std::uint64_t>(m) >= threshold) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // uniform double in [0, 1) with 53 random bits
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Stable way to derive independent streams from one root seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    Rng r(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
    r.next();
    return r.next();
}

}  // namespace netredist
