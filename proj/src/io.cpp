#include "surdstats/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>

namespace surdstats {

json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw std::invalid_argument("int_from_json: malformed integer '" +
                                        j.get<std::string>() + "'");
        return v;
    }
    throw std::invalid_argument("int_from_json: expected string or integer");
}

json to_json(const Surd& x) {
    return json{{"p", int_to_json(x.p())}, {"q", int_to_json(x.q())}, {"d", int_to_json(x.d())}};
}

Surd surd_from_json(const json& j) {
    return Surd(int_from_json(j.at("p")), int_from_json(j.at("q")), int_from_json(j.at("d")));
}

json to_json(const QuadForm& f) {
    return json::array({int_to_json(f.a), int_to_json(f.b), int_to_json(f.c)});
}

QuadForm form_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("form_from_json: expected [a, b, c]");
    return QuadForm(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
}

json to_json(const ClassCycle& c) {
    json forms = json::array();
    for (const QuadForm& f : c.forms) forms.push_back(to_json(f));
    json period = json::array();
    for (const Int& a : c.period) period.push_back(int_to_json(a));
    return json{{"forms", std::move(forms)},
                {"root", to_json(c.root)},
                {"period", std::move(period)}};
}

json to_json(const PellSolution& s) {
    return json{{"x", int_to_json(s.x)}, {"y", int_to_json(s.y)}};
}

PellSolution pell_from_json(const json& j) {
    return {int_from_json(j.at("x")), int_from_json(j.at("y"))};
}

json to_json(const DigitStats& s) {
    json counts = json::object();
    for (std::int64_t k = 1; k <= s.cap(); ++k)
        if (s.count(k) > 0) counts[std::to_string(k)] = s.count(k);
    return json{{"K", s.cap()},
                {"total", s.total()},
                {"tail", s.tail()},
                {"counts", std::move(counts)}};
}

DigitStats digit_stats_from_json(const json& j) {
    DigitStats s(j.at("K").get<std::int64_t>());
    for (const auto& [key, value] : j.at("counts").items()) {
        const std::int64_t k = std::stoll(key);
        const std::uint64_t cnt = value.get<std::uint64_t>();
        for (std::uint64_t i = 0; i < cnt; ++i) s.add_digit(k);
    }
    const std::uint64_t tail = j.at("tail").get<std::uint64_t>();
    for (std::uint64_t i = 0; i < tail; ++i) s.add_digit(s.cap() + 1);
    if (s.total() != j.at("total").get<std::uint64_t>())
        throw std::invalid_argument("digit_stats_from_json: total mismatch");
    return s;
}

json to_json(const SweepRecord& r) {
    json j{{"schema", SweepRecord::schema_version},
           {"mode", to_string(r.mode)},
           {"digit_cap", r.digit_cap},
           {"d", int_to_json(r.d)},
           {"fundamental", r.fundamental},
           {"h_plus", int_to_json(r.h_plus)},
           {"h_wide", int_to_json(r.h_wide)},
           {"cycle_count", r.cycle_count},
           {"total_period", r.total_period},
           {"pell", to_json(r.pell)},
           {"regulator", r.regulator},
           {"geodesic_length", r.geodesic_length},
           {"agg_stats", to_json(r.agg_stats)},
           {"cycle_periods", r.cycle_periods},
           {"per_cycle_tv", r.per_cycle_tv},
           {"agg_tv", r.agg_tv},
           {"agg_chi2", r.agg_chi2},
           {"max_cycle_tv", r.max_cycle_tv}};
    if (r.n) j["n"] = int_to_json(*r.n);
    return j;
}

SweepRecord sweep_record_from_json(const json& j) {
    if (j.at("schema").get<int>() != SweepRecord::schema_version)
        throw std::invalid_argument("sweep_record_from_json: schema version mismatch");
    SweepRecord r;
    r.mode = sweep_mode_from_string(j.at("mode").get<std::string>());
    r.digit_cap = j.at("digit_cap").get<std::int64_t>();
    r.d = int_from_json(j.at("d"));
    if (j.contains("n")) r.n = int_from_json(j.at("n"));
    r.fundamental = j.at("fundamental").get<bool>();
    r.h_plus = int_from_json(j.at("h_plus"));
    r.h_wide = int_from_json(j.at("h_wide"));
    r.cycle_count = j.at("cycle_count").get<std::int64_t>();
    r.total_period = j.at("total_period").get<std::int64_t>();
    r.pell = pell_from_json(j.at("pell"));
    r.regulator = j.at("regulator").get<double>();
    r.geodesic_length = j.at("geodesic_length").get<double>();
    r.agg_stats = digit_stats_from_json(j.at("agg_stats"));
    r.cycle_periods = j.at("cycle_periods").get<std::vector<std::int64_t>>();
    r.per_cycle_tv = j.at("per_cycle_tv").get<std::vector<double>>();
    r.agg_tv = j.at("agg_tv").get<double>();
    r.agg_chi2 = j.at("agg_chi2").get<double>();
    r.max_cycle_tv = j.at("max_cycle_tv").get<double>();
    return r;
}

json to_json(const XsectionReport& r) {
    return json{{"jacobian_samples", r.config.jacobian_samples},
                {"invariance_samples", r.config.invariance_samples},
                {"contraction_pairs", r.config.contraction_pairs},
                {"contraction_steps", r.config.contraction_steps},
                {"orbit_length", r.config.orbit_length},
                {"marginal_bins", r.config.marginal_bins},
                {"seed", r.config.seed},
                {"max_jacobian_deviation", r.max_jacobian_deviation},
                {"invariance_violations", r.invariance_violations},
                {"worst_margin", r.worst_margin},
                {"max_contraction_rel_error", r.max_contraction_rel_error},
                {"marginal_tv", r.marginal_tv}};
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void digit_stats_csv(std::ostream& os, const DigitStats& s) {
    os << "k,count,freq,gk_mass,abs_diff\n";
    for (std::int64_t k = 1; k <= s.cap(); ++k) {
        const double f = s.freq(k);
        const double m = gk_mass(k);
        os << k << ',' << s.count(k) << ',' << fmt_double(f) << ',' << fmt_double(m) << ','
           << fmt_double(std::fabs(f - m)) << '\n';
    }
    const double tf = s.tail_freq();
    const double tm = gk_tail(s.cap());
    os << "tail," << s.tail() << ',' << fmt_double(tf) << ',' << fmt_double(tm) << ','
       << fmt_double(std::fabs(tf - tm)) << '\n';
}

const char* const kSweepCsvHeader = "d,fundamental,h_plus,total_period,regulator,agg_tv,max_cycle_tv";

std::string sweep_csv_row(const SweepRecord& r) {
    std::string row = r.d.get_str();
    row += r.fundamental ? ",1," : ",0,";
    row += r.h_plus.get_str();
    row += ',';
    row += std::to_string(r.total_period);
    row += ',';
    row += fmt_double(r.regulator);
    row += ',';
    row += fmt_double(r.agg_tv);
    row += ',';
    row += fmt_double(r.max_cycle_tv);
    return row;
}

}  // namespace surdstats
