#include "surdstats/sweep.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include "surdstats/io.hpp"

namespace surdstats {

const char* to_string(SweepMode m) {
    return m == SweepMode::discriminant ? "discriminant" : "sqrt";
}

SweepMode sweep_mode_from_string(const std::string& s) {
    if (s == "discriminant") return SweepMode::discriminant;
    if (s == "sqrt") return SweepMode::sqrt;
    throw std::invalid_argument("sweep mode must be 'discriminant' or 'sqrt'");
}

SweepRecord aggregate_discriminant(const Int& d, std::int64_t digit_cap) {
    const std::vector<ClassCycle> cycles = class_cycles(d);  // validates d
    SweepRecord r;
    r.mode = SweepMode::discriminant;
    r.digit_cap = digit_cap;
    r.d = d;
    r.fundamental = is_fundamental_discriminant(d);
    r.h_plus = Int(cycles.size());
    r.cycle_count = static_cast<std::int64_t>(cycles.size());
    r.agg_stats = DigitStats(digit_cap);

    for (const ClassCycle& c : cycles) {
        DigitStats cs(digit_cap);
        for (const Int& a : c.period) cs.add_digit(a);
        const double tv = distribution_distance(cs, DistanceMetric::tv);
        r.per_cycle_tv.push_back(tv);
        r.max_cycle_tv = std::max(r.max_cycle_tv, tv);
        r.cycle_periods.push_back(static_cast<std::int64_t>(c.period.size()));
        r.total_period += static_cast<std::int64_t>(c.period.size());
        r.agg_stats.merge(cs);
    }
    assert(r.agg_stats.total() == static_cast<std::uint64_t>(r.total_period));

    // Period parity (norm -1 unit existence) is a discriminant invariant.
    const bool neg_unit = cycles.front().odd_period();
    r.h_wide = neg_unit ? r.h_plus : r.h_plus / 2;

    r.pell = pell4_fundamental(d);
    r.regulator = log_unit(r.pell.x, r.pell.y, d);
    r.geodesic_length = 2.0 * r.regulator;
    r.agg_tv = distribution_distance(r.agg_stats, DistanceMetric::tv);
    r.agg_chi2 = distribution_distance(r.agg_stats, DistanceMetric::chi2);
    return r;
}

SweepRecord sqrt_stats(const Int& n, std::int64_t digit_cap) {
    if (n <= 1) throw std::invalid_argument("sqrt_stats: n must be > 1");
    if (is_perfect_square(n))
        throw std::invalid_argument("sqrt_stats: perfect square " + n.get_str() +
                                    " has a finite expansion");
    const CFExpansion e = cf_expand(Surd::sqrt_of(n));

    SweepRecord r;
    r.mode = SweepMode::sqrt;
    r.digit_cap = digit_cap;
    r.n = n;
    r.d = 4 * n;  // sqrt(n) is a root of x^2 - n, discriminant 4n
    r.fundamental = is_fundamental_discriminant(r.d);
    r.h_plus = narrow_class_number(r.d);
    r.h_wide = wide_class_number(r.d);
    r.cycle_count = 1;
    r.total_period = static_cast<std::int64_t>(e.period.size());
    r.cycle_periods.push_back(r.total_period);
    r.agg_stats = digit_stats(e, digit_cap);
    r.agg_tv = distribution_distance(r.agg_stats, DistanceMetric::tv);
    r.agg_chi2 = distribution_distance(r.agg_stats, DistanceMetric::chi2);
    r.per_cycle_tv.push_back(r.agg_tv);
    r.max_cycle_tv = r.agg_tv;
    r.pell = pell4_fundamental(r.d);
    r.regulator = log_unit(r.pell.x, r.pell.y, r.d);
    r.geodesic_length = 2.0 * r.regulator;
    return r;
}

namespace {

struct Cache {
    // key: (mode, digit_cap, d as string)
    using Key = std::tuple<std::string, std::int64_t, std::string>;
    std::map<Key, SweepRecord> entries;
    std::size_t warnings = 0;

    static Key key_of(SweepMode mode, std::int64_t cap, const Int& d) {
        return {to_string(mode), cap, d.get_str()};
    }

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return;  // nothing cached yet
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                const json j = json::parse(line);
                SweepRecord rec = sweep_record_from_json(j);
                entries.emplace(key_of(rec.mode, rec.digit_cap, rec.d), std::move(rec));
            } catch (const std::exception&) {
                ++warnings;  // corrupt or stale line; recompute
            }
        }
    }

    const SweepRecord* find(SweepMode mode, std::int64_t cap, const Int& d) const {
        const auto it = entries.find(key_of(mode, cap, d));
        return it == entries.end() ? nullptr : &it->second;
    }
};

void append_cache(const std::string& path, const std::vector<const SweepRecord*>& recs) {
    if (recs.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cache: cannot open '" + path + "' for append");
    for (const SweepRecord* r : recs) out << to_json(*r).dump() << '\n';
    if (!out) throw std::runtime_error("cache: write failure on '" + path + "'");
}

class OutputFile {
public:
    OutputFile(const std::string& path) : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }

    void line(const std::string& s) {
        out_ << s << '\n';
        if (!out_) {
            fail();
            throw std::runtime_error("write failure on '" + path_ + "'");
        }
    }

    void close() {
        out_.close();
        if (out_.fail()) throw std::runtime_error("close failure on '" + path_ + "'");
    }

private:
    void fail() {
        // Best effort: mark the file as truncated for downstream readers.
        out_.clear();
        out_ << "# INCOMPLETE: write failure\n";
        out_.flush();
    }

    std::string path_;
    std::ofstream out_;
};

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg, std::ostream* log) {
    if (cfg.d_min > cfg.d_max) throw std::invalid_argument("run_sweep: d_min > d_max");
    if (cfg.class_cap < 1) throw std::invalid_argument("run_sweep: class cap must be >= 1");
    if (cfg.digit_cap < 1) throw std::invalid_argument("run_sweep: digit cap must be >= 1");

    SweepSummary summary;

    // Admissible sweep values, ascending. The fundamental-only filter can
    // run before any expensive work; the class cap cannot.
    std::vector<Int> candidates;
    for (Int v = cfg.d_min; v <= cfg.d_max; ++v) {
        if (cfg.mode == SweepMode::discriminant) {
            if (!is_valid_discriminant(v)) continue;
            ++summary.candidates;
            if (cfg.fundamental_only && !is_fundamental_discriminant(v)) continue;
        } else {
            if (v <= 1 || is_perfect_square(v)) continue;
            ++summary.candidates;
            if (cfg.fundamental_only && !is_fundamental_discriminant(4 * v)) continue;
        }
        candidates.push_back(v);
    }

    Cache cache;
    if (!cfg.cache_path.empty()) cache.load(cfg.cache_path);
    summary.cache_warnings = cache.warnings;

    std::vector<SweepRecord> records(candidates.size());
    std::vector<char> from_cache(candidates.size(), 0);

    const auto compute = [&](std::size_t i) {
        const Int& v = candidates[i];
        if (const SweepRecord* hit = cache.find(cfg.mode, cfg.digit_cap, v)) {
            records[i] = *hit;
            from_cache[i] = 1;
            return;
        }
        records[i] = cfg.mode == SweepMode::discriminant
                         ? aggregate_discriminant(v, cfg.digit_cap)
                         : sqrt_stats(v, cfg.digit_cap);
    };

    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1 || candidates.size() < 2) {
        for (std::size_t i = 0; i < candidates.size(); ++i) compute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n_threads = std::min<std::size_t>(jobs, candidates.size());
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= candidates.size()) return;
                    compute(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    // Persist everything newly computed, admitted or not.
    if (!cfg.cache_path.empty()) {
        std::vector<const SweepRecord*> fresh;
        for (std::size_t i = 0; i < records.size(); ++i)
            if (!from_cache[i]) fresh.push_back(&records[i]);
        append_cache(cfg.cache_path, fresh);
    }

    // Filter and emit in ascending order.
    std::vector<SweepRecord> admitted;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (from_cache[i]) ++summary.cache_hits;
        if (records[i].h_plus > cfg.class_cap) continue;
        admitted.push_back(std::move(records[i]));
    }

    if (!cfg.out_csv.empty()) {
        OutputFile csv(cfg.out_csv);
        csv.line(kSweepCsvHeader);
        for (const SweepRecord& r : admitted) csv.line(sweep_csv_row(r));
        csv.close();
    }
    if (!cfg.out_jsonl.empty()) {
        OutputFile jsonl(cfg.out_jsonl);
        for (const SweepRecord& r : admitted) jsonl.line(to_json(r).dump());
        jsonl.close();
    }

    // Dyadic buckets of the sweep variable.
    if (!admitted.empty()) {
        double sum_tv = 0.0, sum_max = 0.0;
        for (const SweepRecord& r : admitted) {
            sum_tv += r.agg_tv;
            sum_max += r.max_cycle_tv;
        }
        summary.mean_agg_tv = sum_tv / static_cast<double>(admitted.size());
        summary.mean_max_cycle_tv = sum_max / static_cast<double>(admitted.size());

        Int lo = 1;
        while (2 * lo <= cfg.d_min) lo *= 2;
        for (; lo <= cfg.d_max; lo *= 2) {
            const Int hi = 2 * lo;
            SweepBucket b;
            b.lo = lo;
            b.hi = hi;
            double tv = 0.0, mx = 0.0;
            for (const SweepRecord& r : admitted) {
                const Int& v = r.mode == SweepMode::sqrt ? *r.n : r.d;
                if (v >= lo && v < hi) {
                    ++b.count;
                    tv += r.agg_tv;
                    mx += r.max_cycle_tv;
                }
            }
            if (b.count == 0) continue;
            b.mean_agg_tv = tv / static_cast<double>(b.count);
            b.mean_max_cycle_tv = mx / static_cast<double>(b.count);
            summary.buckets.push_back(b);
        }
    }

    summary.admitted = admitted.size();
    summary.records = std::move(admitted);

    if (log) {
        *log << "sweep mode=" << to_string(cfg.mode) << " range=[" << cfg.d_min << ","
             << cfg.d_max << "] class_cap=" << cfg.class_cap
             << " fundamental_only=" << (cfg.fundamental_only ? 1 : 0)
             << " digit_cap=" << cfg.digit_cap << " seed=" << cfg.seed << "\n";
        *log << "candidates=" << summary.candidates << " admitted=" << summary.admitted
             << " cache_hits=" << summary.cache_hits
             << " cache_warnings=" << summary.cache_warnings << "\n";
        for (const SweepBucket& b : summary.buckets)
            *log << "bucket [" << b.lo << "," << b.hi << "): n=" << b.count
                 << " mean_agg_tv=" << fmt_double(b.mean_agg_tv)
                 << " mean_max_cycle_tv=" << fmt_double(b.mean_max_cycle_tv) << "\n";
        if (summary.admitted > 0)
            *log << "overall mean_agg_tv=" << fmt_double(summary.mean_agg_tv)
                 << " mean_max_cycle_tv=" << fmt_double(summary.mean_max_cycle_tv) << "\n";
    }
    return summary;
}

}  // namespace surdstats
