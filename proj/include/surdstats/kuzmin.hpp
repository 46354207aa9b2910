#pragma once

#include <cstdint>

#include "surdstats/gauss_kuzmin.hpp"

namespace surdstats {

/// Monte Carlo histogram of the n-th continued-fraction digit of a uniform
/// random point of (0,1): applies the Gauss map n-1 times in double
/// precision and bins floor(1/x), so n = 1 reproduces the interval lengths
/// 1/k - 1/(k+1) and n -> infinity approaches Gauss-Kuzmin. Deterministic
/// given (seed, n, N). n is capped at 20: each step loses about
/// log2(digit) bits of precision. Throws std::invalid_argument for
/// n < 1, n > 20 or N < 1.
DigitStats kuzmin_montecarlo(unsigned n, std::uint64_t N, std::uint64_t seed,
                             std::int64_t cap = 50);

}  // namespace surdstats
