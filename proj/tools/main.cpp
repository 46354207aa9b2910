#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "surdstats/ergodic.hpp"
#include "surdstats/io.hpp"
#include "surdstats/kuzmin.hpp"
#include "surdstats/sweep.hpp"
#include "surdstats/xsection.hpp"

namespace {

using namespace surdstats;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIoError = 3;

Int parse_int(const std::string& text) {
    Int v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("not an integer: '" + text + "'");
    return v;
}

// "<n>" expands sqrt(n); "<p>,<q>,<d>" expands (p + sqrt(d))/q.
Surd parse_surd_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() == 1) {
        const Int n = parse_int(parts[0]);
        if (n <= 1) throw std::invalid_argument("radicand must be > 1");
        if (is_perfect_square(n))
            throw std::invalid_argument("perfect square " + n.get_str() +
                                        " is rational: finite expansion");
        return Surd::sqrt_of(n);
    }
    if (parts.size() == 3)
        return Surd(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
    throw std::invalid_argument("expected <n> or <p>,<q>,<d>");
}

std::string format_expansion(const CFExpansion& e) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.preperiod.size(); ++i) {
        if (i) os << ",";
        os << e.preperiod[i];
    }
    if (!e.preperiod.empty()) os << "; ";
    os << "(";
    for (std::size_t i = 0; i < e.period.size(); ++i) {
        if (i) os << ",";
        os << e.period[i];
    }
    os << ")]";
    return os.str();
}

json expansion_to_json(const CFExpansion& e) {
    json pre = json::array(), per = json::array();
    for (const Int& a : e.preperiod) pre.push_back(int_to_json(a));
    for (const Int& a : e.period) per.push_back(int_to_json(a));
    return json{{"preperiod", std::move(pre)}, {"period", std::move(per)}};
}

int cmd_cf(const std::string& spec, bool as_json) {
    const Surd x = parse_surd_spec(spec);
    const CFExpansion e = cf_expand(x);
    if (as_json) {
        json j = expansion_to_json(e);
        j["input"] = to_json(x);
        j["period_length"] = e.period.size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << x.str() << " = " << format_expansion(e) << "\n";
        std::cout << "period_length " << e.period.size() << "\n";
    }
    return kExitOk;
}

int cmd_class(const std::string& d_text, bool as_json) {
    const Int d = parse_int(d_text);
    const auto cycles = class_cycles(d);  // validates d
    const Int hp(cycles.size());
    const bool neg = cycles.front().odd_period();
    const Int hw = neg ? hp : hp / 2;
    if (as_json) {
        json jc = json::array();
        for (const ClassCycle& c : cycles) jc.push_back(to_json(c));
        std::cout << json{{"d", int_to_json(d)},
                          {"h_plus", int_to_json(hp)},
                          {"h_wide", int_to_json(hw)},
                          {"negative_norm_unit", neg},
                          {"cycles", std::move(jc)}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "d " << d << "\n";
    std::cout << "h_plus " << hp << "\n";
    std::cout << "h_wide " << hw << "\n";
    std::cout << "negative_norm_unit " << (neg ? 1 : 0) << "\n";
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const ClassCycle& c = cycles[i];
        std::cout << "cycle " << i + 1 << ":";
        for (const QuadForm& f : c.forms) std::cout << " " << f.str();
        std::cout << "\n  root " << c.root.str() << "\n  period [";
        for (std::size_t k = 0; k < c.period.size(); ++k) {
            if (k) std::cout << ",";
            std::cout << c.period[k];
        }
        std::cout << "]\n";
    }
    return kExitOk;
}

int cmd_pell(const std::string& d_text, bool as_json) {
    const Int d = parse_int(d_text);
    const PellSolution s = pell4_fundamental(d);
    const double reg = log_unit(s.x, s.y, d);
    if (as_json) {
        std::cout << json{{"d", int_to_json(d)},
                          {"x", int_to_json(s.x)},
                          {"y", int_to_json(s.y)},
                          {"regulator", reg},
                          {"geodesic_length", 2.0 * reg}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "d " << d << "\n";
    std::cout << "x " << s.x << "\n";
    std::cout << "y " << s.y << "\n";
    std::cout << "regulator " << fmt_double(reg) << "\n";
    std::cout << "geodesic_length " << fmt_double(2.0 * reg) << "\n";
    return kExitOk;
}

int cmd_stats(const std::string& n_text, std::int64_t digit_cap, bool as_json) {
    const SweepRecord r = sqrt_stats(parse_int(n_text), digit_cap);
    if (as_json) {
        std::cout << to_json(r).dump() << "\n";
        return kExitOk;
    }
    std::cout << "# n " << *r.n << "\n";
    std::cout << "# d " << r.d << "\n";
    std::cout << "# fundamental " << (r.fundamental ? 1 : 0) << "\n";
    std::cout << "# h_plus " << r.h_plus << "\n";
    std::cout << "# h_wide " << r.h_wide << "\n";
    std::cout << "# period_length " << r.total_period << "\n";
    std::cout << "# regulator " << fmt_double(r.regulator) << "\n";
    std::cout << "# tv " << fmt_double(r.agg_tv) << "\n";
    std::cout << "# chi2 " << fmt_double(r.agg_chi2) << "\n";
    digit_stats_csv(std::cout, r.agg_stats);
    return kExitOk;
}

int cmd_kuzmin(unsigned n, std::uint64_t samples, std::uint64_t seed,
               std::int64_t digit_cap) {
    const DigitStats s = kuzmin_montecarlo(n, samples, seed, digit_cap);
    std::cout << "# n " << n << "\n# samples " << samples << "\n# seed " << seed << "\n";
    digit_stats_csv(std::cout, s);
    return kExitOk;
}

int cmd_xsection(std::uint64_t samples, std::uint64_t seed) {
    const XsectionReport rep = xsection_checks(samples, seed);
    std::cout << to_json(rep).dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued fractions of quadratic irrationals, class cycles of "
                 "indefinite forms, and Gauss-Kuzmin digit statistics"};
    app.require_subcommand(1);

    // cf
    std::string cf_spec;
    bool cf_json = false;
    auto* cf = app.add_subcommand("cf", "Continued fraction of sqrt(n) or (p+sqrt(d))/q");
    cf->add_option("value", cf_spec, "<n> or <p>,<q>,<d>")->required();
    cf->add_flag("--json", cf_json, "JSON output");

    // class
    std::string class_d;
    bool class_json = false;
    auto* cls = app.add_subcommand("class", "Reduced form cycles of a discriminant");
    cls->add_option("d", class_d, "discriminant")->required();
    cls->add_flag("--json", class_json, "JSON output");

    // pell
    std::string pell_d;
    bool pell_json = false;
    auto* pell = app.add_subcommand("pell", "Fundamental solution of x^2 - d y^2 = 4");
    pell->add_option("d", pell_d, "discriminant")->required();
    pell->add_flag("--json", pell_json, "JSON output");

    // stats
    std::string stats_n;
    std::int64_t stats_cap = 50;
    bool stats_json = false;
    auto* stats = app.add_subcommand("stats", "Digit statistics of sqrt(n)");
    stats->add_option("--sqrt", stats_n, "radicand n")->required();
    stats->add_option("--digit-cap", stats_cap, "histogram cap (default 50)");
    stats->add_flag("--json", stats_json, "JSON output");

    // sweep
    SweepConfig cfg;
    std::string sweep_min, sweep_max, sweep_cap = "1000000", sweep_mode = "discriminant";
    auto* sweep = app.add_subcommand("sweep", "Per-discriminant sweep with CSV/JSONL output");
    sweep->add_option("--min", sweep_min, "lower end of the range")->required();
    sweep->add_option("--max", sweep_max, "upper end of the range")->required();
    sweep->add_option("--class-cap", sweep_cap, "admit h+ <= cap");
    sweep->add_flag("--fundamental-only", cfg.fundamental_only,
                    "fundamental discriminants only");
    sweep->add_option("--digit-cap", cfg.digit_cap, "histogram cap (default 50)");
    sweep->add_option("--mode", sweep_mode, "'discriminant' or 'sqrt'");
    sweep->add_option("--out-csv", cfg.out_csv, "CSV summary path");
    sweep->add_option("--out-jsonl", cfg.out_jsonl, "JSONL records path");
    sweep->add_option("--cache", cfg.cache_path, "JSONL cache path");
    sweep->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
    sweep->add_option("--seed", cfg.seed, "recorded in the summary; runs are deterministic");

    // xsection
    std::uint64_t xs_samples = 1000000, xs_seed = 1;
    auto* xs = app.add_subcommand("xsection", "Return-map measure checks");
    xs->add_option("--samples", xs_samples, "sample budget (default 10^6)");
    xs->add_option("--seed", xs_seed, "RNG seed");

    // kuzmin
    unsigned kz_n = 15;
    std::uint64_t kz_samples = 1000000, kz_seed = 1;
    std::int64_t kz_cap = 50;
    auto* kz = app.add_subcommand("kuzmin", "Monte Carlo digit distribution at depth n");
    kz->add_option("--n", kz_n, "digit index, 1..20 (default 15)");
    kz->add_option("--samples", kz_samples, "sample count (default 10^6)");
    kz->add_option("--seed", kz_seed, "RNG seed");
    kz->add_option("--digit-cap", kz_cap, "histogram cap (default 50)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (*cf) return cmd_cf(cf_spec, cf_json);
        if (*cls) return cmd_class(class_d, class_json);
        if (*pell) return cmd_pell(pell_d, pell_json);
        if (*stats) return cmd_stats(stats_n, stats_cap, stats_json);
        if (*sweep) {
            cfg.d_min = parse_int(sweep_min);
            cfg.d_max = parse_int(sweep_max);
            cfg.class_cap = parse_int(sweep_cap);
            cfg.mode = sweep_mode_from_string(sweep_mode);
            run_sweep(cfg, &std::cout);
            return kExitOk;
        }
        if (*xs) return cmd_xsection(xs_samples, xs_seed);
        if (*kz) return cmd_kuzmin(kz_n, kz_samples, kz_seed, kz_cap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::runtime_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}
