#pragma once

#include <optional>

#include "surdstats/integer.hpp"

namespace surdstats {

/// Fundamental solution of x^2 - d y^2 = 4: the minimal positive (x, y).
/// (x + y sqrt(d))/2 is the fundamental automorph value, e > 1.
struct PellSolution {
    Int x, y;
};

/// Fundamental solution via the continued fraction of the principal cycle's
/// root: x = trace of the cycle automorph, y = sqrt((x^2 - 4)/d) exactly.
/// Throws std::invalid_argument on invalid discriminants.
PellSolution pell4_fundamental(const Int& d);

/// Brute-force search y = 1, 2, ... for d y^2 + 4 a perfect square, capped
/// at y <= y_cap. Independent test oracle; exponential in the regulator.
std::optional<PellSolution> pell4_bruteforce(const Int& d, const Int& y_cap);

/// Verifies minimality of a claimed solution by brute search below its
/// square root: a non-fundamental lambda = mu^m (m >= 2) forces a solution
/// with lambda' <= sqrt(lambda), i.e. y' <= ceil(2 sqrt(lambda)/sqrt(d)).
/// Returns true iff no smaller positive solution exists.
bool pell4_verify_minimal(const Int& d, const PellSolution& s);

/// ln((x + y sqrt(d))/2) for the fundamental solution; always positive.
double regulator(const Int& d);

/// Length of the closed geodesics of discriminant d: 2 * regulator.
double geodesic_length(const Int& d);

}  // namespace surdstats
