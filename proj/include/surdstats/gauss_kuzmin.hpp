#pragma once

#include <cstdint>
#include <vector>

#include "surdstats/cf.hpp"

namespace surdstats {

/// Gauss-Kuzmin mass at digit k: log2(1 + 1/(k(k+2))). Sums to 1 over
/// k = 1, 2, ... (telescoping). Throws std::invalid_argument for k < 1.
double gk_mass(std::int64_t k);

/// Tail mass beyond the cap: 1 - sum_{k<=K} gk_mass(k), in closed form
/// (the partial sums telescope to log2(2(K+1)/(K+2))).
double gk_tail(std::int64_t K);

/// Digit histogram with a tail bucket: counts for k = 1..K, digits > K
/// pooled into `tail`. total == sum(counts) + tail.
struct DigitStats {
    explicit DigitStats(std::int64_t cap = 50);

    void add_digit(const Int& digit);
    void add_digit(std::int64_t digit);
    void merge(const DigitStats& other);  // caps must match

    std::int64_t cap() const { return K_; }
    std::uint64_t count(std::int64_t k) const;
    std::uint64_t tail() const { return tail_; }
    std::uint64_t total() const { return total_; }

    double freq(std::int64_t k) const;
    double tail_freq() const;

    std::vector<std::uint64_t> counts_;  // index 1..K used
    std::int64_t K_;
    std::uint64_t tail_ = 0;
    std::uint64_t total_ = 0;
};

/// Histogram of one period of an expansion (preperiod excluded): the
/// in-period frequencies equal the orbit statistic c(alpha, k) for
/// eventually periodic alpha.
DigitStats digit_stats(const CFExpansion& e, std::int64_t cap = 50);

enum class DistanceMetric { tv, chi2 };

/// Distance between the empirical digit distribution and Gauss-Kuzmin,
/// with tail pooling:
///   tv   = 1/2 sum_{k<=K} |freq(k) - gk(k)|  +  1/2 |tailFreq - gkTail(K)|
///   chi2 = sum of squared deviations relative to the Gauss-Kuzmin mass.
double distribution_distance(const DigitStats& s, DistanceMetric metric = DistanceMetric::tv);

}  // namespace surdstats
