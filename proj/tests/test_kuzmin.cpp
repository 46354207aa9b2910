#include <doctest.h>

#include <cmath>

#include "surdstats/kuzmin.hpp"

using namespace surdstats;

TEST_CASE("argument validation and the N=1 edge") {
    CHECK_THROWS_AS(kuzmin_montecarlo(0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(kuzmin_montecarlo(21, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(kuzmin_montecarlo(5, 0, 1), std::invalid_argument);
    CHECK(kuzmin_montecarlo(5, 1, 7).total() == 1);
}

TEST_CASE("deterministic given the seed") {
    const DigitStats a = kuzmin_montecarlo(10, 20000, 12345);
    const DigitStats b = kuzmin_montecarlo(10, 20000, 12345);
    const DigitStats c = kuzmin_montecarlo(10, 20000, 54321);
    CHECK(a.total() == b.total());
    bool all_equal = a.tail() == b.tail();
    bool differs_somewhere = a.tail() != c.tail();
    for (std::int64_t k = 1; k <= 50; ++k) {
        all_equal = all_equal && a.count(k) == b.count(k);
        differs_somewhere = differs_somewhere || a.count(k) != c.count(k);
    }
    CHECK(all_equal);
    CHECK(differs_somewhere);
}

TEST_CASE("first digit follows the interval lengths 1/k - 1/(k+1)") {
    const DigitStats s = kuzmin_montecarlo(1, 400000, 99);
    for (std::int64_t k = 1; k <= 6; ++k) {
        const double expect = 1.0 / k - 1.0 / (k + 1);
        CHECK(std::fabs(s.freq(k) - expect) < 0.004);  // ~5 sigma at this N
    }
    // and it is distinguishably NOT Gauss-Kuzmin at n = 1
    CHECK(std::fabs(s.freq(1) - gk_mass(1)) > 0.05);
}

TEST_CASE("deep digits approach Gauss-Kuzmin") {
    const DigitStats s = kuzmin_montecarlo(12, 300000, 2024);
    for (std::int64_t k = 1; k <= 5; ++k)
        CHECK(std::fabs(s.freq(k) - gk_mass(k)) < 0.006);
    CHECK(s.total() == 300000);
}
