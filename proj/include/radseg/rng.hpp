#pragma once

#include <cstdint>

namespace radseg {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; bijective on u64.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Stateless stream derivation. For a fixed seed this is bijective in
// `index`, so derived seeds never collide within one parent stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGoldenGamma);
}

// Counter-based splitmix64 stream. Same (seed, draw sequence) gives the
// same values on every platform, run and thread.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    // Uniform over [0, bound). bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        using u128 = unsigned __int128;
        return static_cast<std::uint64_t>((static_cast<u128>(next_u64()) * bound) >> 64);
    }

    // Uniform integer over the inclusive range [lo, hi].
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform over [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform over [lo, hi).
    double next_range(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

private:
    std::uint64_t state_;
};

}  // namespace radseg
