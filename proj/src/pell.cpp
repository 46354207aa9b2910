#include "surdstats/pell.hpp"

#include <array>
#include <cmath>
#include <cassert>
#include <stdexcept>

#include "surdstats/forms.hpp"

namespace surdstats {

namespace {

void require_valid(const Int& d, const char* who) {
    if (!is_valid_discriminant(d))
        throw std::invalid_argument(std::string(who) + ": invalid discriminant " + d.get_str());
}

// Principal reduced form (1, b0, ...) with the largest admissible b0.
QuadForm principal(const Int& d) {
    const Int s = isqrt(d);
    const Int b0 = (mod_floor(d, 2) == mod_floor(s, 2)) ? s : s - 1;
    return QuadForm(1, b0, exact_div(b0 * b0 - d, 4));
}

}  // namespace

PellSolution pell4_fundamental(const Int& d) {
    require_valid(d, "pell4_fundamental");
    const CFExpansion e = cf_expand(reduced_root(principal(d)));
    assert(e.preperiod.empty());

    IntMatrix2 m = period_matrix(e.period);
    if (m.det() != 1) m = m * m;  // odd period: square up to the +4 automorph
    const Int x = m.a + m.d;
    const Int yy = exact_div(x * x - 4, d);
    Int y = isqrt(yy);
    if (y * y != yy) throw std::logic_error("pell4_fundamental: trace identity failed");
    assert(x > 0 && y > 0 && x * x - d * y * y == 4);
    return {x, std::move(y)};
}

namespace {

// Per-modulus filter: can d*y^2 + 4 be a square given y mod m? Depends on
// y mod m only, so one table lookup replaces the modular arithmetic.
struct ResidueFilter {
    static constexpr std::array<unsigned, 3> mods = {64, 63, 65};
    std::array<std::array<bool, 65>, 3> pass{};

    explicit ResidueFilter(const Int& d) {
        for (std::size_t i = 0; i < mods.size(); ++i) {
            const unsigned m = mods[i];
            std::array<bool, 65> is_sq{};
            for (unsigned r = 0; r < m; ++r) is_sq[r * r % m] = true;
            const std::uint64_t dm = mpz_fdiv_ui(d.get_mpz_t(), m);
            for (unsigned r = 0; r < m; ++r)
                pass[i][r] = is_sq[(dm * r % m * r + 4) % m];
        }
    }
};

#ifdef __SIZEOF_INT128__
using uint128 = unsigned __int128;

bool exact_square_u128(uint128 v, std::uint64_t* root) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (static_cast<uint128>(s) * s > v) --s;
    while (static_cast<uint128>(s + 1) * (s + 1) <= v) ++s;
    if (static_cast<uint128>(s) * s != v) return false;
    *root = s;
    return true;
}
#endif

}  // namespace

std::optional<PellSolution> pell4_bruteforce(const Int& d, const Int& y_cap) {
    require_valid(d, "pell4_bruteforce");
    if (y_cap < 1) return std::nullopt;
    const ResidueFilter filter(d);

#ifdef __SIZEOF_INT128__
    // Native path: d*y^2 + 4 fits in 128 bits comfortably below these caps.
    if (d.fits_ulong_p() && y_cap.fits_ulong_p() && d < Int("1000000000000") &&
        y_cap < Int("4000000000")) {
        const std::uint64_t dd = d.get_ui();
        const std::uint64_t cap = y_cap.get_ui();
        unsigned c0 = 1 % 64, c1 = 1 % 63, c2 = 1 % 65;
        for (std::uint64_t y = 1; y <= cap; ++y) {
            if (filter.pass[0][c0] && filter.pass[1][c1] && filter.pass[2][c2]) {
                const uint128 v = static_cast<uint128>(dd) * y * y + 4;
                std::uint64_t root = 0;
                if (exact_square_u128(v, &root))
                    return PellSolution{Int(std::to_string(root)), Int(std::to_string(y))};
            }
            if (++c0 == 64) c0 = 0;
            if (++c1 == 63) c1 = 0;
            if (++c2 == 65) c2 = 0;
        }
        return std::nullopt;
    }
#endif

    Int value = d + 4;  // d*y^2 + 4 at y = 1
    for (Int y = 1; y <= y_cap; ++y) {
        const bool maybe = filter.pass[0][mpz_fdiv_ui(y.get_mpz_t(), 64)] &&
                           filter.pass[1][mpz_fdiv_ui(y.get_mpz_t(), 63)] &&
                           filter.pass[2][mpz_fdiv_ui(y.get_mpz_t(), 65)];
        if (maybe && is_perfect_square(value)) return PellSolution{isqrt(value), y};
        value += d * (2 * y + 1);  // advance to d*(y+1)^2 + 4
    }
    return std::nullopt;
}

bool pell4_verify_minimal(const Int& d, const PellSolution& s) {
    require_valid(d, "pell4_verify_minimal");
    if (s.x <= 2 || s.y <= 0 || s.x * s.x - d * s.y * s.y != 4) return false;
    // lambda = (x + y sqrt(d))/2 > 1. Were it not fundamental it would be
    // mu^m with m >= 2, and mu <= sqrt(lambda) yields a solution with
    // y' <= ceil(2 sqrt(lambda) / sqrt(d)); search that range exhaustively.
    const Int lam_ceil = s.x;  // lambda < x since y sqrt(d) < x
    const Int y_bound = 2 * (isqrt(lam_ceil) + 1) / isqrt(d) + 2;
    const auto smaller = pell4_bruteforce(d, y_bound);
    return !smaller || smaller->y >= s.y;
}

double regulator(const Int& d) {
    const PellSolution s = pell4_fundamental(d);
    return log_unit(s.x, s.y, d);
}

double geodesic_length(const Int& d) { return 2.0 * regulator(d); }

}  // namespace surdstats
