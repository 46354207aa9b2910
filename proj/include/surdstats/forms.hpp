#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "surdstats/cf.hpp"
#include "surdstats/integer.hpp"
#include "surdstats/surd.hpp"

namespace surdstats {

/// Primitive integral binary quadratic form a x^2 + b xy + c y^2 with
/// positive non-square discriminant b^2 - 4ac (indefinite, a != 0, c != 0).
struct QuadForm {
    Int a, b, c;

    QuadForm(Int a_, Int b_, Int c_);

    Int disc() const { return b * b - 4 * a * c; }

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QuadForm& o) const { return !(*this == o); }
    bool operator<(const QuadForm& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }

    std::string str() const;
};

/// d > 0, d ≡ 0 or 1 (mod 4), d not a perfect square.
bool is_valid_discriminant(const Int& d);

/// d ≡ 1 (mod 4) squarefree, or d = 4m with m squarefree and m ≡ 2, 3
/// (mod 4). Throws std::invalid_argument on invalid discriminants.
bool is_fundamental_discriminant(const Int& d);

/// First root of q(x, 1) = 0: the canonical surd (-b + sqrt(disc))/(2a).
/// Its conjugate is the other root.
Surd form_root(const QuadForm& f);

/// Indefinite reduction condition 0 < b < sqrt(disc) and
/// sqrt(disc) - b < 2|a| < sqrt(disc) + b, decided exactly with
/// s = floor(sqrt(disc)).
bool is_reduced_form(const QuadForm& f);

/// The reduced surd classically attached to a reduced form with a > 0:
/// (b + sqrt(disc))/(2a). Satisfies the Galois criterion, and its
/// continued-fraction digits walk the form's cycle.
Surd reduced_root(const QuadForm& f);

/// Reduction step on reduced forms: (a,b,c) -> (c, b', (b'^2 - disc)/(4c))
/// with b' ≡ -b (mod 2|c|) and sqrt(disc) - 2|c| < b' < sqrt(disc).
/// Throws std::invalid_argument when f is not reduced. Iterating returns
/// to f; the orbits are the form classes.
QuadForm rho_step(const QuadForm& f);

/// All primitive reduced forms of discriminant d, sorted lexicographically.
/// Throws std::invalid_argument on invalid d.
std::vector<QuadForm> enumerate_reduced_forms(const Int& d);

/// One rho-orbit of reduced forms. `forms` is in rho order and starts at
/// the lexicographically smallest member with positive leading coefficient;
/// `root` is that form's reduced root and `period` its CF period digits.
struct ClassCycle {
    std::vector<QuadForm> forms;
    Surd root;
    std::vector<Int> period;

    /// Automorph of the cycle: the period matrix when its determinant is
    /// +1, its square otherwise (odd periods give determinant -1). Fixes
    /// `root`, and its dominant eigenvalue is (x + y sqrt(d))/2 for the
    /// fundamental solution of x^2 - d y^2 = 4.
    IntMatrix2 automorph() const;

    /// Determinant of the one-period matrix: -1 iff the period is odd.
    bool odd_period() const { return period.size() % 2 == 1; }
};

/// Partition of the reduced forms of discriminant d into rho-cycles,
/// deterministically ordered. The cycle count is the narrow class number
/// h+(d); one cycle per class, one closed geodesic per class.
std::vector<ClassCycle> class_cycles(const Int& d);

/// Narrow form class number h+(d) = number of rho-cycles.
Int narrow_class_number(const Int& d);

/// True iff x^2 - d y^2 = -4 is solvable, decided by the parity of the
/// principal cycle's CF period.
bool has_negative_norm_unit(const Int& d);

/// Wide (ordinary) form class number: h+(d) when a norm -1 unit exists,
/// h+(d)/2 otherwise.
Int wide_class_number(const Int& d);

/// Outcome of the bounded BFS equivalence search.
enum class OracleResult { equivalent, not_equivalent, inconclusive };

/// Breadth-first search over the generator actions
///   T:    (a,b,c) -> (a, b + 2a, a + b + c)
///   T^-1: (a,b,c) -> (a, b - 2a, a - b + c)
///   S:    (a,b,c) -> (c, -b, a)
/// pruned at coefficients of absolute value > bound. Returns `equivalent`
/// when g is reached; `not_equivalent` when the closure is complete
/// (nothing was pruned) or when both forms are reduced and
/// bound >= 3*disc, which provably connects same-class reduced forms;
/// `inconclusive` otherwise. Test oracle for class_cycles; independent of
/// rho_step.
OracleResult equivalence_oracle(const QuadForm& f, const QuadForm& g, const Int& bound);

/// Number of connected components of the reduced forms of discriminant d
/// under the oracle's generator moves within `bound`. With bound >= 3d this
/// equals the class count, by a route independent of rho_step.
std::size_t oracle_class_count(const Int& d, const Int& bound);

}  // namespace surdstats
