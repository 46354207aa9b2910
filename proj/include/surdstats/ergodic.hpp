#pragma once

#include <cstdint>
#include <string>

#include "surdstats/surd.hpp"

namespace surdstats {

/// Test-function catalog for ergodic averages over Gauss-map orbits.
struct TestFunction {
    enum class Kind { indicator, log1p, identity };

    Kind kind = Kind::identity;
    double u = 0.0, v = 1.0;  // indicator bounds, [u, v] in [0, 1]

    static TestFunction indicator(double u, double v);
    static TestFunction log1p() { return {Kind::log1p}; }
    static TestFunction identity() { return {Kind::identity}; }

    /// Parses "indicator:u:v", "log1p" or "id". Throws
    /// std::invalid_argument for unknown ids.
    static TestFunction parse(const std::string& id);

    double operator()(double x) const;
};

/// (1/N) sum_{k=0}^{N-1} f(T^k(x0)) for the Gauss map T(x) = {1/x}.
/// The orbit is tracked exactly through surd states (the orbit point is
/// the reciprocal of the next PQa iterate); f is evaluated in floating
/// point. Past one period the sum uses exact period weighting instead of
/// looping.
double ergodic_average(const Surd& x0, const TestFunction& f, std::uint64_t N);

}  // namespace surdstats
