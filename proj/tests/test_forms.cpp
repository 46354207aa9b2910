#include <doctest.h>

#include <cmath>
#include <set>

#include "surdstats/forms.hpp"

using namespace surdstats;

TEST_CASE("discriminant validity") {
    CHECK(is_valid_discriminant(Int(5)));
    CHECK_FALSE(is_valid_discriminant(Int(7)));   // 3 mod 4
    CHECK_FALSE(is_valid_discriminant(Int(16)));  // square
    CHECK_FALSE(is_valid_discriminant(Int(0)));
    CHECK_FALSE(is_valid_discriminant(Int(-4)));
    CHECK(is_valid_discriminant(Int(8)));
    CHECK(is_valid_discriminant(Int(12)));
    CHECK(is_valid_discriminant(Int(13)));
}

TEST_CASE("fundamental discriminants") {
    CHECK(is_fundamental_discriminant(Int(5)));    // squarefree, 1 mod 4
    CHECK(is_fundamental_discriminant(Int(12)));   // 4*3, 3 mod 4
    CHECK_FALSE(is_fundamental_discriminant(Int(20)));  // 4*5, 5 is 1 mod 4
    CHECK(is_fundamental_discriminant(Int(8)));    // 4*2
    CHECK_FALSE(is_fundamental_discriminant(Int(45)));  // 9 | 45
    CHECK_THROWS_AS(is_fundamental_discriminant(Int(7)), std::invalid_argument);
}

TEST_CASE("form construction enforces the invariants") {
    CHECK_THROWS_AS(QuadForm(2, 2, -2), std::invalid_argument);  // imprimitive
    CHECK_THROWS_AS(QuadForm(0, 1, 1), std::invalid_argument);   // a == 0
    CHECK_THROWS_AS(QuadForm(1, 1, 1), std::invalid_argument);   // negative disc
    CHECK_THROWS_AS(QuadForm(1, 3, 0), std::invalid_argument);   // c == 0
    CHECK(QuadForm(1, 2, -2).disc() == 12);
}

TEST_CASE("form_root is the first root of q(x,1)") {
    // (1,2,-2): (-2 + sqrt12)/2 = sqrt3 - 1
    const Surd r = form_root(QuadForm(1, 2, -2));
    CHECK(r == Surd::unchecked(-2, 2, 12));
    CHECK(r.to_double() == doctest::Approx(std::sqrt(3.0) - 1.0));

    // (1,-1,-1): golden ratio
    CHECK(form_root(QuadForm(1, -1, -1)) == Surd(1, 2, 5));

    // (1,0,-2): sqrt2, carried as (0 + sqrt8)/2
    const Surd s = form_root(QuadForm(1, 0, -2));
    CHECK(s == Surd::unchecked(0, 2, 8));
    CHECK(reduce_square_factor(s) == Surd::sqrt_of(2));
    // second endpoint is the conjugate
    CHECK(s.conjugate().to_double() == doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("reduction predicate") {
    CHECK(is_reduced_form(QuadForm(1, 2, -2)));    // 2|a|=2 in (sqrt12-2, sqrt12+2)
    CHECK_FALSE(is_reduced_form(QuadForm(1, 0, -2)));  // b = 0
    CHECK(is_reduced_form(QuadForm(2, 2, -1)));
    CHECK(is_reduced_form(QuadForm(1, 1, -1)));
    CHECK_FALSE(is_reduced_form(QuadForm(1, -1, -1)));  // b < 0
}

TEST_CASE("rho_step examples and cycle closure") {
    const QuadForm f(1, 2, -2);
    const QuadForm g = rho_step(f);
    CHECK(g == QuadForm(-2, 2, 1));
    CHECK(rho_step(g) == f);  // cycle of length 2

    CHECK(rho_step(QuadForm(1, 1, -1)) == QuadForm(-1, 1, 1));
    CHECK_THROWS_AS(rho_step(QuadForm(1, 0, -2)), std::invalid_argument);
}

TEST_CASE("enumerate_reduced_forms matches the hand scans") {
    const auto d12 = enumerate_reduced_forms(Int(12));
    const std::set<QuadForm> expect12{QuadForm(1, 2, -2), QuadForm(-1, 2, 2),
                                      QuadForm(2, 2, -1), QuadForm(-2, 2, 1)};
    CHECK(std::set<QuadForm>(d12.begin(), d12.end()) == expect12);
    CHECK(std::is_sorted(d12.begin(), d12.end()));

    const auto d5 = enumerate_reduced_forms(Int(5));
    const std::set<QuadForm> expect5{QuadForm(1, 1, -1), QuadForm(-1, 1, 1)};
    CHECK(std::set<QuadForm>(d5.begin(), d5.end()) == expect5);

    CHECK_THROWS_AS(enumerate_reduced_forms(Int(7)), std::invalid_argument);
}

TEST_CASE("class cycles partition the reduced forms") {
    const auto cycles12 = class_cycles(Int(12));
    REQUIRE(cycles12.size() == 2);
    const std::set<QuadForm> c0(cycles12[0].forms.begin(), cycles12[0].forms.end());
    const std::set<QuadForm> c1(cycles12[1].forms.begin(), cycles12[1].forms.end());
    CHECK(c0 == std::set<QuadForm>{QuadForm(1, 2, -2), QuadForm(-2, 2, 1)});
    CHECK(c1 == std::set<QuadForm>{QuadForm(-1, 2, 2), QuadForm(2, 2, -1)});

    const auto cycles5 = class_cycles(Int(5));
    REQUIRE(cycles5.size() == 1);
    CHECK(cycles5[0].forms.size() == 2);
    CHECK(cycles5[0].period == std::vector<Int>{1});  // golden-ratio root
    CHECK(cycles5[0].root == Surd(1, 2, 5));
}

TEST_CASE("cycle structure properties over small discriminants") {
    for (long d = 5; d <= 150; ++d) {
        if (!is_valid_discriminant(Int(d))) continue;
        const auto cycles = class_cycles(Int(d));
        CHECK(!cycles.empty());
        std::size_t members = 0;
        bool first_parity = cycles.front().odd_period();
        for (const ClassCycle& c : cycles) {
            members += c.forms.size();
            CHECK(c.forms.size() % 2 == 0);  // leading signs alternate
            CHECK(c.odd_period() == first_parity);  // parity is a d-invariant
            for (const QuadForm& f : c.forms) CHECK(is_reduced_form(f));
            // closure: walking rho around the list returns to the start
            QuadForm cur = c.forms.front();
            for (std::size_t i = 1; i < c.forms.size(); ++i) {
                cur = rho_step(cur);
                CHECK(cur == c.forms[i]);
            }
            CHECK(rho_step(cur) == c.forms.front());
            // root reduction and the measured period/cycle-length relation
            CHECK(c.root.is_reduced());
            const std::size_t l = c.period.size();
            CHECK(c.forms.size() == (l % 2 == 0 ? l : 2 * l));
        }
        CHECK(members == enumerate_reduced_forms(Int(d)).size());
    }
}

TEST_CASE("equivalence oracle examples") {
    const QuadForm f(1, 1, -1), g(-1, 1, 1);
    CHECK(equivalence_oracle(f, f, Int(100)) == OracleResult::equivalent);
    CHECK(equivalence_oracle(f, g, Int(15)) == OracleResult::equivalent);

    const QuadForm a(1, 2, -2), b(-1, 2, 2);
    CHECK(equivalence_oracle(a, b, Int(36)) == OracleResult::not_equivalent);  // 3*disc
    CHECK(equivalence_oracle(a, b, Int(2)) == OracleResult::inconclusive);
    CHECK_THROWS_AS(equivalence_oracle(f, a, Int(10)), std::invalid_argument);
}

TEST_CASE("oracle class count agrees with rho cycles up to d = 120") {
    for (long d = 5; d <= 120; ++d) {
        if (!is_valid_discriminant(Int(d))) continue;
        const auto cycles = class_cycles(Int(d));
        CHECK(oracle_class_count(Int(d), Int(3 * d)) == cycles.size());
    }
}

TEST_CASE("narrow and wide class numbers") {
    CHECK(narrow_class_number(Int(5)) == 1);
    CHECK(narrow_class_number(Int(12)) == 2);
    CHECK(narrow_class_number(Int(8)) == 1);

    CHECK(has_negative_norm_unit(Int(5)));       // (1+sqrt5)/2 has norm -1
    CHECK_FALSE(has_negative_norm_unit(Int(12)));
    CHECK(wide_class_number(Int(5)) == 1);
    CHECK(wide_class_number(Int(12)) == 1);  // narrow 2, no norm -1 unit

    for (long d = 5; d <= 150; ++d) {
        if (!is_valid_discriminant(Int(d))) continue;
        const Int hp = narrow_class_number(Int(d));
        const Int hw = wide_class_number(Int(d));
        CHECK((hw == hp || 2 * hw == hp));
    }
}
