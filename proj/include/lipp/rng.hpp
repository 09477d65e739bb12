// Deterministic 64-bit generator used everywhere randomness is needed.
// splitmix64: trivially portable across languages, so seeded instance
// generation can be reproduced outside this codebase.
#ifndef LIPP_RNG_HPP
#define LIPP_RNG_HPP

#include <cstdint>

namespace lipp {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // value in [0, n); plain modulo, bias is irrelevant at these ranges
    uint64_t next_below(uint64_t n) { return next() % n; }

    // value in [0, 1)
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace lipp

#endif
