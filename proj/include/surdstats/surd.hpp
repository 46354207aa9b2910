#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "surdstats/integer.hpp"

namespace surdstats {

/// Quadratic irrational (p + sqrt(d))/q in canonical PQa form:
///   * d > 0 and not a perfect square,
///   * q != 0,
///   * q | d - p^2.
/// The divisibility condition keeps the continued-fraction recurrence
/// integral: every iterate of the Gauss map on a canonical surd is again
/// a canonical surd with the same d. Two surds are equal iff their
/// normalized triples are componentwise equal.
class Surd {
public:
    /// Normalizing constructor. If q does not divide d - p^2, scales the
    /// triple to (p|q|, q|q|, d q^2) and then divides out the largest common
    /// content e (e | p, e | q, e^2 | d) that preserves canonicity.
    Surd(Int p, Int q, Int d);

    /// sqrt(n) as (0 + sqrt(n))/1.
    static Surd sqrt_of(Int n) { return Surd(0, 1, std::move(n)); }

    /// Trusted constructor for internal recurrences; asserts canonicity in
    /// debug builds only.
    static Surd unchecked(Int p, Int q, Int d);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }

    /// The algebraic conjugate (p - sqrt(d))/q, represented with the same d
    /// as (-p + sqrt(d))/(-q).
    Surd conjugate() const { return unchecked(-p_, -q_, d_); }

    /// Exact sign of *this - u/v; requires v > 0. Never 0 (irrationality).
    int compare_rational(const Int& u, const Int& v) const;

    /// Galois criterion: value > 1 and conjugate in (-1, 0). Exactly the
    /// purely periodic continued fractions.
    bool is_reduced() const;

    /// Approximate real value; for reporting only.
    double to_double() const;

    bool operator==(const Surd& other) const {
        return p_ == other.p_ && q_ == other.q_ && d_ == other.d_;
    }
    bool operator!=(const Surd& other) const { return !(*this == other); }
    bool operator<(const Surd& other) const {  // container ordering, not numeric
        return std::tie(p_, q_, d_) < std::tie(other.p_, other.q_, other.d_);
    }

    std::string str() const;

private:
    Surd() = default;
    Int p_, q_, d_;
};

/// Exact sign of x - u/v with v > 0 (module-level spelling of
/// Surd::compare_rational).
inline int surd_sign(const Surd& x, const Int& u, const Int& v) {
    return x.compare_rational(u, v);
}

/// Optional square-factor reduction of d: returns the equal-valued canonical
/// surd with the smallest d of the form d/e^2 reachable by dividing the
/// triple by a common factor e. Not applied by normalization; the
/// discriminant identity (d vs 4d) matters downstream, so d is otherwise
/// kept as given.
Surd reduce_square_factor(const Surd& x);

}  // namespace surdstats
