#pragma once

#include <stdexcept>

#include "surdstats/integer.hpp"
#include "surdstats/surd.hpp"

namespace surdstats {

/// 2x2 integer matrix (a b; c d) with determinant +-1, acting on surds by
/// fractional linear transformations z -> (az + b)/(cz + d).
struct IntMatrix2 {
    Int a, b, c, d;

    IntMatrix2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        const Int det = this->det();
        if (det != 1 && det != -1)
            throw std::invalid_argument("IntMatrix2: determinant must be +-1");
    }

    static IntMatrix2 identity() { return IntMatrix2(1, 0, 0, 1); }

    /// (a 1; 1 0) — one continued-fraction step with digit a.
    static IntMatrix2 digit(const Int& a) { return IntMatrix2(a, 1, 1, 0); }

    Int det() const { return a * d - b * c; }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return IntMatrix2(a * o.a + b * o.c, a * o.b + b * o.d,
                          c * o.a + d * o.c, c * o.b + d * o.d);
    }

    bool operator==(const IntMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/// Canonical surd equal to (g.a * x + g.b)/(g.c * x + g.d). The result lives
/// in the same field and carries the same d as x.
Surd moebius_apply(const IntMatrix2& g, const Surd& x);

}  // namespace surdstats
