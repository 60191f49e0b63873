#include "dcolor/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcolor {

SummaryStats summarize(std::span<const std::uint64_t> values, std::span<const char> capped,
                       bool exclude_capped) {
    if (!capped.empty() && capped.size() != values.size()) {
        throw std::invalid_argument("cap flags must match the number of values");
    }
    SummaryStats s;
    s.cap_hits_excluded = exclude_capped;
    std::uint64_t sum = 0;
    std::uint64_t lo = UINT64_MAX;
    std::uint64_t hi = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const bool hit = !capped.empty() && capped[i];
        s.cap_hits += hit ? 1 : 0;
        if (hit && exclude_capped) {
            continue;
        }
        sum += values[i];
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
        ++s.trials;
    }
    if (s.trials == 0) {
        return s;
    }
    s.mean = static_cast<double>(static_cast<long double>(sum) / static_cast<long double>(s.trials));
    s.min = static_cast<double>(lo);
    s.max = static_cast<double>(hi);
    if (s.trials > 1) {
        const long double mean = static_cast<long double>(sum) / static_cast<long double>(s.trials);
        long double ss = 0.0L;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (exclude_capped && !capped.empty() && capped[i]) {
                continue;
            }
            const long double d = static_cast<long double>(values[i]) - mean;
            ss += d * d;
        }
        s.sd = static_cast<double>(std::sqrt(ss / static_cast<long double>(s.trials - 1)));
        s.se = s.sd / std::sqrt(static_cast<double>(s.trials));
    }
    s.ci_low = s.mean - kZ99 * s.se;
    s.ci_high = s.mean + kZ99 * s.se;
    return s;
}

bool within_se(double observed, double expected, double se, double k) noexcept {
    return std::fabs(observed - expected) <= k * se;
}

}  // namespace dcolor
