#pragma once

#include <cstdint>
#include <vector>

namespace surdstats {

/// Natural coordinates on the cross section: y in (0,1) and
/// z in (0, 1/(1+y)). This domain D is forward invariant under the return
/// map, carries Lebesgue measure of total mass ln 2, and its y-marginal is
/// the Gauss density (1/ln 2)/(1+y).
struct XPoint {
    double y;
    double z;
};

bool in_domain(const XPoint& p, double margin = 0.0);

/// Return map T(y, z) = ({1/y}, y(1 - yz)). Rejects y with 1/y within
/// 1e-15 of an integer (the measure-zero section boundary).
XPoint xsection_map(const XPoint& p);

struct XsectionConfig {
    std::uint64_t jacobian_samples = 10'000;
    std::uint64_t invariance_samples = 1'000'000;
    std::uint64_t contraction_pairs = 1'000;
    unsigned contraction_steps = 50;
    std::uint64_t orbit_length = 1'000'000;
    unsigned marginal_bins = 100;
    std::uint64_t seed = 1;
};

struct XsectionReport {
    XsectionConfig config;

    // (i) analytic Jacobian determinant, triangular: (-1/y^2)(-y^2) = 1.
    double max_jacobian_deviation = 0.0;

    // (ii) one-step forward invariance of D.
    std::uint64_t invariance_violations = 0;
    double worst_margin = 0.0;  // most negative slack seen (>= 0 if none)

    // (iii) fiber contraction |dz'/dz| = y^2: measured |Δz_n| against
    // |Δz_0| * prod y_i^2. The pair difference shrinks far below double
    // resolution over 50 steps, so this measurement runs in extended
    // precision internally; the map itself stays double.
    double max_contraction_rel_error = 0.0;

    // (iv) y-marginal of a long orbit vs the Gauss density, total
    // variation over `marginal_bins` cells.
    double marginal_tv = 0.0;
    std::vector<double> marginal_hist;  // empirical bin frequencies
};

XsectionReport xsection_checks(const XsectionConfig& cfg);

/// Convenience form: `samples` drives the invariance and orbit budgets;
/// the other budgets scale down from it.
XsectionReport xsection_checks(std::uint64_t samples, std::uint64_t seed);

}  // namespace surdstats
