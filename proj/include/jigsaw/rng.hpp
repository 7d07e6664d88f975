#pragma once

#include <cstdint>
#include <random>

namespace jigsaw {

/// SplitMix64 finaliser. Bijective on 64-bit words, so distinct inputs stay
/// distinct after mixing.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream splitting rule: the child seed for stream `stream` of `parent` is
/// mix64(parent ^ mix64(stream)). Every seeded consumer in the library derives
/// its seeds this way.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) noexcept {
    return mix64(parent ^ mix64(stream));
}

/// Portable seeded generator: std::mt19937_64 (whose output sequence is fixed
/// by the standard) seeded with mix64(seed), plus bounded draws that do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace jigsaw
