#include "surdstats/surd.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace surdstats {

namespace {

void check_field(const Int& d, const Int& q) {
    if (d <= 0) throw std::invalid_argument("Surd: d must be positive");
    if (is_perfect_square(d)) throw std::invalid_argument("Surd: d must not be a perfect square");
    if (q == 0) throw std::invalid_argument("Surd: q must be nonzero");
}

bool canonical(const Int& p, const Int& q, const Int& d) {
    return divides(q, d - p * p);
}

// Ascending divisors of g > 0 by trial division. Inputs here are the
// gcd of an already-scaled (p, q), small in practice.
std::vector<Int> divisors_of(const Int& g) {
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= g; ++i) {
        if (!divides(i, g)) continue;
        small.push_back(i);
        Int other = g / i;
        if (other != i) large.push_back(other);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace

Surd::Surd(Int p, Int q, Int d) {
    check_field(d, q);
    if (!canonical(p, q, d)) {
        // Scale by |q|: (p|q| + sqrt(d q^2)) / (q|q|) keeps the value and
        // forces the divisibility, then shed whatever content the scaling
        // introduced.
        Int aq = abs(q);
        p *= aq;
        d *= aq * aq;
        q *= aq;
        const Int g = gcd(abs(p), abs(q));
        const auto divs = divisors_of(g);
        for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
            const Int& e = *it;
            if (e == 1) break;
            if (!divides(e * e, d)) continue;
            Int np = p / e, nq = q / e, nd = d / (e * e);
            if (canonical(np, nq, nd)) {
                p = np;
                q = nq;
                d = nd;
                break;
            }
        }
    }
    p_ = std::move(p);
    q_ = std::move(q);
    d_ = std::move(d);
}

Surd Surd::unchecked(Int p, Int q, Int d) {
    assert(q != 0 && divides(q, d - p * p));
    Surd s;
    s.p_ = std::move(p);
    s.q_ = std::move(q);
    s.d_ = std::move(d);
    return s;
}

int Surd::compare_rational(const Int& u, const Int& v) const {
    if (v <= 0) throw std::invalid_argument("compare_rational: v must be positive");
    // (p + sqrt(d))/q - u/v = (pv - uq + v sqrt(d)) / (qv)
    const int num = sign_of_root_sum(p_ * v - u * q_, v, d_);
    return sgn(q_) > 0 ? num : -num;
}

bool Surd::is_reduced() const {
    if (compare_rational(1, 1) <= 0) return false;
    const Surd conj = conjugate();
    return conj.compare_rational(0, 1) < 0 && conj.compare_rational(-1, 1) > 0;
}

double Surd::to_double() const {
    const std::size_t bits =
        std::max<std::size_t>(128, mpz_sizeinbase(d_.get_mpz_t(), 2) + 64);
    mpf_class fp(p_, bits), fq(q_, bits), fd(d_, bits);
    mpf_class root(0, bits);
    mpf_sqrt(root.get_mpf_t(), fd.get_mpf_t());
    mpf_class val = (fp + root) / fq;
    return val.get_d();
}

std::string Surd::str() const {
    std::ostringstream os;
    os << "(" << p_ << "+sqrt(" << d_ << "))/" << q_;
    return os.str();
}

Surd reduce_square_factor(const Surd& x) {
    const Int g = gcd(abs(x.p()), abs(x.q()));
    if (g > 1) {
        const auto divs = [&] {
            std::vector<Int> out;
            for (Int i = 2; i * i <= g; ++i)
                if (divides(i, g)) out.push_back(i);
            out.push_back(g);
            return out;
        }();
        for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
            const Int& e = *it;
            if (!divides(e * e, x.d())) continue;
            Int np = x.p() / e, nq = x.q() / e, nd = x.d() / (e * e);
            if (divides(nq, nd - np * np) && !is_perfect_square(nd))
                return reduce_square_factor(Surd::unchecked(np, nq, nd));
        }
    }
    return x;
}

}  // namespace surdstats
