#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surdstats/forms.hpp"
#include "surdstats/gauss_kuzmin.hpp"
#include "surdstats/pell.hpp"

namespace surdstats {

/// discriminant: sweep d and pool digit statistics over all class cycles
/// (the counting ratio numerator/denominator per discriminant).
/// sqrt: sweep n and take the statistics of sqrt(n) directly; the record
/// then carries the associated discriminant 4n.
enum class SweepMode { discriminant, sqrt };

const char* to_string(SweepMode m);
SweepMode sweep_mode_from_string(const std::string& s);

/// Per-discriminant summary. In discriminant mode the digit statistics
/// pool every cycle's period (total == totalPeriod, the discrete form of
/// "denominator = sum of cycle lengths"); in sqrt mode they cover the
/// single expansion of sqrt(n).
struct SweepRecord {
    static constexpr int schema_version = 1;

    SweepMode mode = SweepMode::discriminant;
    std::int64_t digit_cap = 50;
    Int d;                         // discriminant (4n in sqrt mode)
    std::optional<Int> n;          // radicand, sqrt mode only
    bool fundamental = false;
    Int h_plus;                    // narrow class number (cycle count)
    Int h_wide;                    // ordinary class number
    std::int64_t cycle_count = 0;  // cycles aggregated in this record
    std::int64_t total_period = 0;
    PellSolution pell;
    double regulator = 0.0;
    double geodesic_length = 0.0;
    DigitStats agg_stats{50};
    std::vector<std::int64_t> cycle_periods;
    std::vector<double> per_cycle_tv;
    double agg_tv = 0.0;
    double agg_chi2 = 0.0;
    double max_cycle_tv = 0.0;
};

/// Expands every cycle of discriminant d and pools the period digits.
/// Throws std::invalid_argument on invalid d.
SweepRecord aggregate_discriminant(const Int& d, std::int64_t digit_cap = 50);

/// Statistics of sqrt(n) for non-square n > 1, with the class data of the
/// associated discriminant 4n. Throws std::invalid_argument on perfect
/// squares (finite expansions) and n <= 1.
SweepRecord sqrt_stats(const Int& n, std::int64_t digit_cap = 50);

struct SweepConfig {
    Int d_min, d_max;
    Int class_cap = 1000000;  // admit h+ <= class_cap
    bool fundamental_only = false;
    std::int64_t digit_cap = 50;
    SweepMode mode = SweepMode::discriminant;
    std::string out_csv;      // empty: no CSV output
    std::string out_jsonl;    // empty: no JSONL output
    std::string cache_path;   // empty: no cache
    unsigned jobs = 1;
    std::uint64_t seed = 0;   // recorded in the summary; computations are
                              // deterministic in (config, library version)
};

struct SweepBucket {
    Int lo, hi;  // [lo, hi)
    std::size_t count = 0;
    double mean_agg_tv = 0.0;
    double mean_max_cycle_tv = 0.0;
};

struct SweepSummary {
    std::size_t candidates = 0;  // valid d (or non-square n) in range
    std::size_t admitted = 0;    // after class-cap / fundamental filters
    std::size_t cache_hits = 0;
    std::size_t cache_warnings = 0;  // corrupt or stale cache lines
    double mean_agg_tv = 0.0;
    double mean_max_cycle_tv = 0.0;
    std::vector<SweepBucket> buckets;  // dyadic d-ranges
    std::vector<SweepRecord> records;  // admitted, ascending d
};

/// Runs the sweep: iterates the range, skips invalid discriminants
/// (or square n), applies the filters, emits CSV/JSONL when configured and
/// returns the admitted records with dyadic-bucket means. Output order is
/// ascending d regardless of `jobs`. I/O failures throw
/// std::system_error-like runtime errors naming the path; a partially
/// written file is closed with a trailing "# INCOMPLETE" line.
SweepSummary run_sweep(const SweepConfig& cfg, std::ostream* log = nullptr);

}  // namespace surdstats
