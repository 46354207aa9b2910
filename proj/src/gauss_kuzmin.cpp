#include "surdstats/gauss_kuzmin.hpp"

#include <cmath>
#include <stdexcept>

namespace surdstats {

double gk_mass(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("gk_mass: k must be >= 1");
    const double kd = static_cast<double>(k);
    return std::log2(1.0 + 1.0 / (kd * (kd + 2.0)));
}

double gk_tail(std::int64_t K) {
    if (K < 1) throw std::invalid_argument("gk_tail: cap must be >= 1");
    // Partial sums telescope: sum_{k<=K} = log2(2(K+1)/(K+2)).
    const double Kd = static_cast<double>(K);
    return 1.0 - std::log2(2.0 * (Kd + 1.0) / (Kd + 2.0));
}

DigitStats::DigitStats(std::int64_t cap) : K_(cap) {
    if (cap < 1) throw std::invalid_argument("DigitStats: cap must be >= 1");
    counts_.assign(static_cast<std::size_t>(cap) + 1, 0);
}

void DigitStats::add_digit(const Int& digit) {
    if (digit < 1) throw std::invalid_argument("DigitStats: digits are >= 1");
    if (digit > K_) {
        ++tail_;
        ++total_;
    } else {
        add_digit(static_cast<std::int64_t>(digit.get_si()));
    }
}

void DigitStats::add_digit(std::int64_t digit) {
    if (digit < 1) throw std::invalid_argument("DigitStats: digits are >= 1");
    if (digit > K_)
        ++tail_;
    else
        ++counts_[static_cast<std::size_t>(digit)];
    ++total_;
}

void DigitStats::merge(const DigitStats& other) {
    if (other.K_ != K_) throw std::invalid_argument("DigitStats::merge: cap mismatch");
    for (std::size_t k = 1; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
    tail_ += other.tail_;
    total_ += other.total_;
}

std::uint64_t DigitStats::count(std::int64_t k) const {
    if (k < 1 || k > K_) throw std::out_of_range("DigitStats::count: digit out of range");
    return counts_[static_cast<std::size_t>(k)];
}

double DigitStats::freq(std::int64_t k) const {
    if (total_ == 0) throw std::logic_error("DigitStats::freq: empty histogram");
    return static_cast<double>(count(k)) / static_cast<double>(total_);
}

double DigitStats::tail_freq() const {
    if (total_ == 0) throw std::logic_error("DigitStats::tail_freq: empty histogram");
    return static_cast<double>(tail_) / static_cast<double>(total_);
}

DigitStats digit_stats(const CFExpansion& e, std::int64_t cap) {
    DigitStats s(cap);
    for (const Int& a : e.period) s.add_digit(a);
    return s;
}

double distribution_distance(const DigitStats& s, DistanceMetric metric) {
    if (s.total() == 0) throw std::invalid_argument("distribution_distance: empty histogram");
    double acc = 0.0;
    for (std::int64_t k = 1; k <= s.cap(); ++k) {
        const double diff = s.freq(k) - gk_mass(k);
        if (metric == DistanceMetric::tv)
            acc += std::fabs(diff);
        else
            acc += diff * diff / gk_mass(k);
    }
    const double tail_diff = s.tail_freq() - gk_tail(s.cap());
    if (metric == DistanceMetric::tv) return 0.5 * (acc + std::fabs(tail_diff));
    return acc + tail_diff * tail_diff / gk_tail(s.cap());
}

}  // namespace surdstats
