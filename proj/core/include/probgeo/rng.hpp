#pragma once

#include <cstdint>

namespace probgeo {

// SplitMix64 finalizer (Steele/Lea/Vigna). Bijective on 64-bit words.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

/// Fixed stream-derivation rule: replicate r of a run seeded with `seed`
/// draws from CounterRng(derive_substream(seed, r)). Keeping this a pure
/// hash makes replicate streams independent of execution order and thread
/// count.
[[nodiscard]] constexpr std::uint64_t derive_substream(std::uint64_t seed,
                                                       std::uint64_t index) noexcept {
    return mix64(mix64(seed + kGoldenGamma) ^ ((index + 1) * kGoldenGamma));
}

/// Deterministic 64-bit counter generator (SplitMix64). The state advances
/// by a fixed odd constant and each output is the mixed counter, so the
/// k-th draw is a pure function of (seed, k). Identical seeds give
/// bit-identical streams on every platform.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform draw on the open interval (0,1): the top 53 bits placed on
    /// the half-offset grid ((k + 0.5) * 2^-53), which never touches 0 or 1.
    double next_open_unit() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace probgeo
