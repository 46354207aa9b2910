#include "surdstats/matrix.hpp"

#include <cassert>

namespace surdstats {

Surd moebius_apply(const IntMatrix2& g, const Surd& x) {
    // With x = (p + sqrt(d))/q the image is
    //   (U + V sqrt(d)) / (W + Z sqrt(d)),  U = ap + bq, V = a,
    //                                       W = cp + dq, Z = c.
    // Rationalizing gives (N + E sqrt(d)) / D with E = q det(g); the
    // canonical divisibility q | d - p^2 makes E divide both N and D, and
    // the quotient triple is canonical again (unimodular transforms
    // preserve integral quadratics of fixed discriminant).
    const Int& p = x.p();
    const Int& q = x.q();
    const Int& d = x.d();

    const Int U = g.a * p + g.b * q;
    const Int W = g.c * p + g.d * q;
    const Int N = U * W - g.a * g.c * d;
    const Int D = W * W - g.c * g.c * d;
    const Int E = q * g.det();

    assert(D != 0);
    Int np = exact_div(N, E);
    Int nq = exact_div(D, E);
    assert(divides(nq, d - np * np));
    return Surd::unchecked(std::move(np), std::move(nq), d);
}

}  // namespace surdstats
