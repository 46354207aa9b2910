#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "surdstats/forms.hpp"
#include "surdstats/gauss_kuzmin.hpp"
#include "surdstats/pell.hpp"
#include "surdstats/surd.hpp"
#include "surdstats/sweep.hpp"
#include "surdstats/xsection.hpp"

namespace surdstats {

using json = nlohmann::json;

/// Arbitrary-precision integers serialize as decimal strings so that
/// round-trips stay exact.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

/// {"p": "...", "q": "...", "d": "..."}
json to_json(const Surd& x);
Surd surd_from_json(const json& j);

/// ["a", "b", "c"]
json to_json(const QuadForm& f);
QuadForm form_from_json(const json& j);

json to_json(const ClassCycle& c);
json to_json(const PellSolution& s);
PellSolution pell_from_json(const json& j);

json to_json(const DigitStats& s);
DigitStats digit_stats_from_json(const json& j);

json to_json(const SweepRecord& r);
SweepRecord sweep_record_from_json(const json& j);

json to_json(const XsectionReport& r);

/// Deterministic double formatting for CSV ('.' decimal separator).
std::string fmt_double(double v);

/// Histogram CSV: header "k,count,freq,gk_mass,abs_diff", one row per
/// digit 1..K and a final "tail" row.
void digit_stats_csv(std::ostream& os, const DigitStats& s);

/// Sweep CSV row and its fixed header
/// d,fundamental,h_plus,total_period,regulator,agg_tv,max_cycle_tv.
extern const char* const kSweepCsvHeader;
std::string sweep_csv_row(const SweepRecord& r);

}  // namespace surdstats
