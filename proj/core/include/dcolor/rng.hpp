#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace dcolor {

// Random streams are part of the reproducibility contract: every run is a
// pure function of its 64-bit seed, on every platform.
//
//   generator   xoshiro256** (Blackman & Vigna), state seeded by four
//               successive SplitMix64 outputs of the seed
//   bounded     uniform(k): Lemire multiply-shift with rejection (unbiased)
//   real        uniform01(): top 53 bits scaled by 2^-53, in [0, 1)
//   per trial   trial_seed(master, i) = mix64(master + golden * (i + 1))
//
// where mix64 is the SplitMix64 output finalizer and golden is
// 0x9E3779B97F4A7C15.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    state += kGoldenGamma;
    return mix64(state);
}

constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
    return mix64(master_seed + kGoldenGamma * (trial_index + 1));
}

class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) noexcept { reseed(seed); }

    void reseed(std::uint64_t seed) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next(); }
    result_type next() noexcept;

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t uniform(std::uint64_t bound) noexcept;

    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace dcolor
