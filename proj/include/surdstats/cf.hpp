#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "surdstats/matrix.hpp"
#include "surdstats/surd.hpp"

namespace surdstats {

/// Eventually periodic continued fraction [pre_0, ..., pre_{m-1};
/// (per_0, ..., per_{l-1}) repeating]. The period is the minimal cycle and
/// cannot be rotated backward into the preperiod; purely periodic
/// expansions (empty preperiod) are exactly those of reduced surds.
struct CFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;  // nonempty

    /// Digit at position k of the infinite expansion.
    const Int& digit(std::size_t k) const {
        if (k < preperiod.size()) return preperiod[k];
        return period[(k - preperiod.size()) % period.size()];
    }
};

/// One step of the integer PQa recurrence on x = (P + sqrt(d))/Q:
///   a  = floor(x)            (exact, via s = floor(sqrt(d)))
///   P' = aQ - P,  Q' = (d - P'^2)/Q
/// Returns (a, next) with next = 1/(x - a) > 1, again canonical.
std::pair<Int, Surd> cf_step(const Surd& x);

/// floor(x), exact. For Q > 0 this is floor((P+s)/Q); for Q < 0 it is
/// floor((P+s+1)/Q), correct because sqrt(d) is irrational.
Int surd_floor(const Surd& x);

/// Full expansion: iterates cf_step, keys states on (P, Q) once the iterate
/// is reduced, and cuts the cycle at the first repeated state. In the
/// reduced regime states biject with expansion tails, so the first repeat
/// yields the minimal period.
CFExpansion cf_expand(const Surd& x);

/// Convergents p_k/q_k of a digit sequence:
///   p_k = a_k p_{k-1} + p_{k-2},  q_k = a_k q_{k-1} + q_{k-2}
/// seeded with p_{-1}=1, p_{-2}=0, q_{-1}=0, q_{-2}=1.
std::vector<std::pair<Int, Int>> convergents(const std::vector<Int>& digits, std::size_t n);

/// Convergents of an eventually periodic expansion, unrolling the period.
std::vector<std::pair<Int, Int>> convergents(const CFExpansion& e, std::size_t n);

/// Product of digit matrices (a_i 1; 1 0) over the given digits, in order.
/// For one period of a reduced surd this matrix fixes the surd.
IntMatrix2 period_matrix(const std::vector<Int>& digits);

}  // namespace surdstats
