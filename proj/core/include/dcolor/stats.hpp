#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace dcolor {

// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.576;

struct SummaryStats {
    std::uint64_t trials = 0;  // trials entering the mean
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (n - 1)
    double se = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::uint64_t cap_hits = 0;
    bool cap_hits_excluded = false;
};

// Mean is the exact integer sum divided by the count, summed in index
// order. Capped trials stay in the sample unless exclude_capped is set.
SummaryStats summarize(std::span<const std::uint64_t> values, std::span<const char> capped = {},
                       bool exclude_capped = false);

// |observed - expected| <= k * se; with se == 0 this demands equality.
bool within_se(double observed, double expected, double se, double k) noexcept;

}  // namespace dcolor
