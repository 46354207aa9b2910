#include <doctest.h>

#include <cmath>

#include "surdstats/forms.hpp"
#include "surdstats/matrix.hpp"
#include "surdstats/pell.hpp"

using namespace surdstats;

TEST_CASE("fundamental solutions of x^2 - d y^2 = 4 for small d") {
    const auto s5 = pell4_fundamental(Int(5));
    CHECK(s5.x == 3);
    CHECK(s5.y == 1);

    const auto s8 = pell4_fundamental(Int(8));
    CHECK(s8.x == 6);
    CHECK(s8.y == 2);

    const auto s12 = pell4_fundamental(Int(12));
    CHECK(s12.x == 4);
    CHECK(s12.y == 1);

    CHECK_THROWS_AS(pell4_fundamental(Int(7)), std::invalid_argument);
    CHECK_THROWS_AS(pell4_fundamental(Int(16)), std::invalid_argument);
}

TEST_CASE("brute-force oracle agreement for valid d <= 60") {
    for (long d = 5; d <= 60; ++d) {
        if (!is_valid_discriminant(Int(d))) continue;
        const PellSolution s = pell4_fundamental(Int(d));
        CHECK(s.x * s.x - Int(d) * s.y * s.y == 4);
        const auto bf = pell4_bruteforce(Int(d), Int(1000000));
        REQUIRE(bf.has_value());
        CHECK(bf->x == s.x);
        CHECK(bf->y == s.y);
        CHECK(pell4_verify_minimal(Int(d), s));
    }
}

TEST_CASE("minimality verifier rejects non-fundamental powers") {
    // (3,1) is fundamental for d=5; its square (7,3) is not.
    CHECK(pell4_verify_minimal(Int(5), PellSolution{3, 1}));
    CHECK_FALSE(pell4_verify_minimal(Int(5), PellSolution{7, 3}));
    CHECK_FALSE(pell4_verify_minimal(Int(5), PellSolution{4, 1}));  // not a solution
}

TEST_CASE("regulator values") {
    CHECK(regulator(Int(5)) ==
          doctest::Approx(std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
    CHECK(regulator(Int(5)) == doctest::Approx(0.9624).epsilon(1e-4));
    CHECK(regulator(Int(8)) ==
          doctest::Approx(std::log(3.0 + 2.0 * std::sqrt(2.0))).epsilon(1e-12));
    CHECK(regulator(Int(8)) == doctest::Approx(1.7627).epsilon(1e-4));
    for (long d = 5; d <= 100; ++d) {
        if (!is_valid_discriminant(Int(d))) continue;
        CHECK(regulator(Int(d)) > 0.0);
        CHECK(geodesic_length(Int(d)) == doctest::Approx(2.0 * regulator(Int(d))));
    }
}

TEST_CASE("cycle automorphs fix their roots and share the Pell eigenvalue") {
    for (long d = 5; d <= 100; ++d) {
        if (!is_valid_discriminant(Int(d))) continue;
        const PellSolution s = pell4_fundamental(Int(d));
        const double log_eps = log_unit(s.x, s.y, Int(d));
        for (const ClassCycle& c : class_cycles(Int(d))) {
            const IntMatrix2 A = c.automorph();
            CHECK(A.det() == 1);
            CHECK(moebius_apply(A, c.root) == c.root);
            // dominant eigenvalue (tr + sqrt(tr^2 - 4))/2 == (x + y sqrt d)/2
            const Int tr = A.a + A.d;
            const Int disc = tr * tr - 4;
            const double log_lambda = log_unit(tr, 1, disc);
            CHECK(log_lambda == doctest::Approx(log_eps).epsilon(1e-11));
        }
    }
}
