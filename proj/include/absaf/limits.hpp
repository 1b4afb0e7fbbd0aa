#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace absaf {

using Clock = std::chrono::steady_clock;

/// Caps for exact combination searches.
struct SearchLimits {
    /// Largest C(m, k) an exact search may enumerate.
    std::uint64_t max_combinations = 20'000'000;
    std::optional<Clock::time_point> deadline;

    static SearchLimits with_timeout(std::chrono::duration<double> timeout) {
        SearchLimits l;
        l.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(timeout);
        return l;
    }
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Throws ResourceLimitError if C(m, k) exceeds the cap.
void check_combination_cap(std::uint64_t m, std::uint64_t k, const SearchLimits& limits);

}  // namespace absaf
