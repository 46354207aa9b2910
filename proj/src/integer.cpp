#include "surdstats/integer.hpp"

#include <cmath>
#include <stdexcept>

namespace surdstats {

double log_mpf(const mpf_class& v) {
    if (v <= 0) throw std::invalid_argument("log_mpf: nonpositive argument");
    long exp2 = 0;
    const double mant = mpf_get_d_2exp(&exp2, v.get_mpf_t());  // v = mant * 2^exp2
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

double log_of(const Int& x) {
    if (x <= 0) throw std::invalid_argument("log_of: nonpositive argument");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

double log_unit(const Int& x, const Int& y, const Int& d) {
    if (x <= 0 || y <= 0 || d <= 0) throw std::invalid_argument("log_unit: nonpositive input");
    // Enough precision that sqrt and the sum keep ~60 good bits.
    const std::size_t bits =
        std::max<std::size_t>(192, mpz_sizeinbase(x.get_mpz_t(), 2) + 96);
    mpf_class fx(x, bits);
    mpf_class rad(0, bits);
    mpf_set_z(rad.get_mpf_t(), Int(y * y * d).get_mpz_t());
    mpf_class root(0, bits);
    mpf_sqrt(root.get_mpf_t(), rad.get_mpf_t());
    mpf_class val = (fx + root) / 2;
    return log_mpf(val);
}

}  // namespace surdstats
