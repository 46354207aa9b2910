#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace surdstats {

/// Arbitrary-precision integer. Everything in the exact layer works on
/// this type; doubles only appear in reporting and measure-theoretic code.
using Int = mpz_class;

/// floor(sqrt(n)) for n >= 0. Throws std::invalid_argument for n < 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Floor division, rounds toward -infinity for any sign of b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// a mod m with result in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& b, const Int& a) {  // b | a
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Exact sign of A + B*sqrt(d) for d > 0 not a perfect square.
/// Never returns 0 unless A == B == 0: sqrt(d) is irrational, so a
/// nonzero B makes the sum irrational and in particular nonzero.
inline int sign_of_root_sum(const Int& A, const Int& B, const Int& d) {
    const int sa = sgn(A), sb = sgn(B);
    if (sb == 0) return sa;
    if (sa == sb || sa == 0) return sb;
    // Opposite signs: compare A^2 against B^2 d.
    const int cmp_sq = cmp(A * A, B * B * d);
    // |A| > |B|sqrt(d) ? dominated by A : dominated by B sqrt(d).
    return cmp_sq > 0 ? sa : sb;
}

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("Int does not fit in int64");
    return static_cast<std::int64_t>(v.get_si());
}

/// ln of a GMP float with an exponent far beyond double range.
double log_mpf(const mpf_class& v);

/// ln(x) for x > 0.
double log_of(const Int& x);

/// ln((x + y*sqrt(d)) / 2) for x, y, d > 0, exact inputs of any size.
double log_unit(const Int& x, const Int& y, const Int& d);

}  // namespace surdstats
