#include "surdstats/kuzmin.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace surdstats {

DigitStats kuzmin_montecarlo(unsigned n, std::uint64_t N, std::uint64_t seed,
                             std::int64_t cap) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("kuzmin_montecarlo: need 1 <= n <= 20");
    if (N < 1) throw std::invalid_argument("kuzmin_montecarlo: need N >= 1");

    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    DigitStats stats(cap);
    const double tail_cut = 1.0 / static_cast<double>(cap + 2);
    for (std::uint64_t i = 0; i < N; ++i) {
        double x;
        bool ok;
        do {  // measure-zero degeneracies: redraw the whole sample
            ok = true;
            x = uniform01();
            if (x <= 0.0 || x >= 1.0) {
                ok = false;
                continue;
            }
            for (unsigned k = 1; k < n; ++k) {
                const double inv = 1.0 / x;
                x = inv - std::floor(inv);
                if (x <= 0.0 || x >= 1.0) {
                    ok = false;
                    break;
                }
            }
        } while (!ok);
        // n-th digit: floor(1/x) of the (n-1)-fold image. Values past the
        // cap go to the tail bucket without the (possibly huge) cast.
        if (x < tail_cut)
            stats.add_digit(cap + 1);
        else
            stats.add_digit(static_cast<std::int64_t>(std::floor(1.0 / x)));
    }
    return stats;
}

}  // namespace surdstats
