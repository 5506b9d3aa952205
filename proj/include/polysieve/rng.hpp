#pragma once

#include <cstdint>

namespace polysieve {

// SplitMix64 (Steele, Lea, Flood 2014; public-domain reference constants).
// Every randomized decision in this library is driven by this generator so
// that runs are reproducible bit-for-bit across platforms and languages.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Exactly uniform over {0, 1, ..., bound-1} via rejection sampling.
    std::uint64_t uniform_below(std::uint64_t bound) {
        std::uint64_t rem = (~bound + 1) % bound;  // 2^64 mod bound
        if (rem == 0) return next() % bound;
        std::uint64_t limit = ~std::uint64_t{0} - rem;
        std::uint64_t x;
        do {
            x = next();
        } while (x > limit);
        return x % bound;
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

// SplitMix64 finalizer, exposed for substream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives an independent substream for work item (i, j) under a master seed.
// substream(seed, i, j) = mix64(mix64(seed + (i+1)*GAMMA) + (j+1)*GAMMA)
// with GAMMA = 0x9E3779B97F4A7C15. Documented so ports can reproduce runs.
inline Rng substream(std::uint64_t seed, std::uint64_t i, std::uint64_t j = 0) {
    constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t s = mix64(seed + (i + 1) * kGamma);
    return Rng(mix64(s + (j + 1) * kGamma));
}

}  // namespace polysieve
