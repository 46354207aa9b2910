#include "surdstats/forms.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

namespace surdstats {

QuadForm::QuadForm(Int a_, Int b_, Int c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a == 0 || c == 0) throw std::invalid_argument("QuadForm: a and c must be nonzero");
    if (!is_valid_discriminant(disc()))
        throw std::invalid_argument("QuadForm: discriminant must be positive, non-square, 0 or 1 mod 4");
    if (gcd(gcd(abs(a), abs(b)), abs(c)) != 1)
        throw std::invalid_argument("QuadForm: form must be primitive");
}

std::string QuadForm::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

bool is_valid_discriminant(const Int& d) {
    if (d <= 0) return false;
    const Int r = mod_floor(d, 4);
    if (r != 0 && r != 1) return false;
    return !is_perfect_square(d);
}

namespace {

bool is_squarefree(const Int& n) {
    if (n <= 0) return false;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (!divides(p, m)) continue;
        m /= p;
        if (divides(p, m)) return false;
    }
    return true;
}

void require_valid(const Int& d, const char* who) {
    if (!is_valid_discriminant(d))
        throw std::invalid_argument(std::string(who) + ": invalid discriminant " + d.get_str());
}

}  // namespace

bool is_fundamental_discriminant(const Int& d) {
    require_valid(d, "is_fundamental_discriminant");
    if (mod_floor(d, 4) == 1) return is_squarefree(d);
    const Int m = d / 4;
    const Int r = mod_floor(m, 4);
    return (r == 2 || r == 3) && is_squarefree(m);
}

Surd form_root(const QuadForm& f) {
    // 2a | disc - b^2 = -4ac, so the triple is canonical as written.
    return Surd::unchecked(-f.b, 2 * f.a, f.disc());
}

bool is_reduced_form(const QuadForm& f) {
    const Int D = f.disc();
    const Int s = isqrt(D);
    if (f.b <= 0 || f.b > s) return false;  // 0 < b < sqrt(D)
    const Int twoa = 2 * abs(f.a);
    // sqrt(D) - b < 2|a| < sqrt(D) + b, strict since sqrt(D) is irrational.
    return twoa >= s + 1 - f.b && twoa <= s + f.b;
}

Surd reduced_root(const QuadForm& f) {
    if (!is_reduced_form(f) || f.a <= 0)
        throw std::invalid_argument("reduced_root: form must be reduced with a > 0");
    return Surd::unchecked(f.b, 2 * f.a, f.disc());
}

QuadForm rho_step(const QuadForm& f) {
    if (!is_reduced_form(f)) throw std::invalid_argument("rho_step: form must be reduced");
    const Int D = f.disc();
    const Int s = isqrt(D);
    const Int modulus = 2 * abs(f.c);
    // Unique b' ≡ -b (mod 2|c|) in the window (sqrt(D) - 2|c|, sqrt(D)).
    const Int bp = s - mod_floor(s + f.b, modulus);
    Int cp = exact_div(bp * bp - D, 4 * f.c);
    return QuadForm(f.c, bp, std::move(cp));
}

std::vector<QuadForm> enumerate_reduced_forms(const Int& d) {
    require_valid(d, "enumerate_reduced_forms");
    const Int s = isqrt(d);
    std::vector<QuadForm> out;
    // b runs over 1..s with b ≡ d (mod 2); then -4ac = d - b^2 =: 4m and
    // (|a|, |c|) runs over the divisor pairs of m.
    for (Int b = (mod_floor(d, 2) == mod_floor(s, 2)) ? s : s - 1; b >= 1; b -= 2) {
        const Int m = exact_div(d - b * b, 4);
        for (Int a0 = 1; a0 * a0 <= m; ++a0) {
            if (!divides(a0, m)) continue;
            const Int c0 = m / a0;
            for (int which = 0; which < 2; ++which) {
                if (which == 1 && c0 == a0) continue;  // square m: pair once
                const Int& aa = which == 0 ? a0 : c0;
                const Int twoa = 2 * aa;
                if (twoa < s + 1 - b || twoa > s + b) continue;
                const Int cc = m / aa;
                if (gcd(gcd(aa, b), cc) != 1) continue;
                out.emplace_back(aa, b, -cc);
                out.emplace_back(-aa, b, cc);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix2 ClassCycle::automorph() const {
    IntMatrix2 m = period_matrix(period);
    if (m.det() == 1) return m;
    return m * m;
}

std::vector<ClassCycle> class_cycles(const Int& d) {
    const std::vector<QuadForm> reduced = enumerate_reduced_forms(d);
    std::set<QuadForm> pending(reduced.begin(), reduced.end());

    std::vector<ClassCycle> cycles;
    for (const QuadForm& start : reduced) {
        if (start.a <= 0 || pending.find(start) == pending.end()) continue;
        std::vector<QuadForm> orbit;
        QuadForm cur = start;
        do {
            const auto it = pending.find(cur);
            assert(it != pending.end());
            pending.erase(it);
            orbit.push_back(cur);
            cur = rho_step(cur);
        } while (cur != start);

        Surd root = reduced_root(start);
        CFExpansion e = cf_expand(root);
        assert(e.preperiod.empty());
        cycles.push_back(ClassCycle{std::move(orbit), std::move(root), std::move(e.period)});
    }
    assert(pending.empty());
    return cycles;
}

Int narrow_class_number(const Int& d) {
    const std::vector<QuadForm> reduced = enumerate_reduced_forms(d);
    std::set<QuadForm> pending(reduced.begin(), reduced.end());
    Int count = 0;
    for (const QuadForm& start : reduced) {
        if (pending.find(start) == pending.end()) continue;
        ++count;
        QuadForm cur = start;
        do {
            pending.erase(cur);
            cur = rho_step(cur);
        } while (cur != start);
    }
    return count;
}

namespace {

// Principal reduced form (1, b0, (b0^2 - d)/4) with the largest b0 <= s of
// the right parity.
QuadForm principal_form(const Int& d) {
    const Int s = isqrt(d);
    const Int b0 = (mod_floor(d, 2) == mod_floor(s, 2)) ? s : s - 1;
    return QuadForm(1, b0, exact_div(b0 * b0 - d, 4));
}

}  // namespace

bool has_negative_norm_unit(const Int& d) {
    require_valid(d, "has_negative_norm_unit");
    const CFExpansion e = cf_expand(reduced_root(principal_form(d)));
    return e.period.size() % 2 == 1;
}

Int wide_class_number(const Int& d) {
    const Int hp = narrow_class_number(d);
    if (has_negative_norm_unit(d)) return hp;
    assert(mod_floor(hp, 2) == 0);
    return hp / 2;
}

namespace {

struct BfsOutcome {
    bool reached = false;
    bool pruned = false;
    std::set<std::pair<Int, Int>> visited;  // (a, b); c is determined by disc
};

// BFS over the generator actions from f, pruned at |coefficient| > bound.
// Stops early when `target` (if any) is reached.
BfsOutcome generator_bfs(const QuadForm& f, const QuadForm* target, const Int& bound) {
    const Int D = f.disc();
    BfsOutcome out;
    const auto key = [](const Int& a, const Int& b) { return std::make_pair(a, b); };
    std::deque<std::pair<Int, Int>> frontier;

    const auto push = [&](const Int& a, const Int& b, const Int& c) {
        if (abs(a) > bound || abs(b) > bound || abs(c) > bound) {
            out.pruned = true;
            return;
        }
        if (!out.visited.insert(key(a, b)).second) return;
        if (target && a == target->a && b == target->b) out.reached = true;
        frontier.emplace_back(a, b);
    };

    push(f.a, f.b, f.c);
    while (!frontier.empty() && !out.reached) {
        auto [a, b] = frontier.front();
        frontier.pop_front();
        const Int c = exact_div(b * b - D, 4 * a);
        push(a, b + 2 * a, a + b + c);  // T
        push(a, b - 2 * a, a - b + c);  // T^-1
        push(c, -b, a);                 // S
    }
    return out;
}

}  // namespace

OracleResult equivalence_oracle(const QuadForm& f, const QuadForm& g, const Int& bound) {
    if (f.disc() != g.disc())
        throw std::invalid_argument("equivalence_oracle: discriminants differ");
    if (f == g) return OracleResult::equivalent;

    const BfsOutcome bfs = generator_bfs(f, &g, bound);
    if (bfs.reached) return OracleResult::equivalent;
    if (!bfs.pruned) return OracleResult::not_equivalent;
    // Same-class reduced forms connect through intermediates with
    // coefficients at most 3*disc (the rho step factors through S and T
    // with that headroom), so a pruned search at this bound is still
    // conclusive for a reduced pair.
    if (is_reduced_form(f) && is_reduced_form(g) && bound >= 3 * f.disc())
        return OracleResult::not_equivalent;
    return OracleResult::inconclusive;
}

std::size_t oracle_class_count(const Int& d, const Int& bound) {
    const std::vector<QuadForm> reduced = enumerate_reduced_forms(d);
    std::set<std::pair<Int, Int>> unseen;
    for (const QuadForm& f : reduced) unseen.emplace(f.a, f.b);

    std::size_t classes = 0;
    for (const QuadForm& f : reduced) {
        if (unseen.find({f.a, f.b}) == unseen.end()) continue;
        ++classes;
        const BfsOutcome bfs = generator_bfs(f, nullptr, bound);
        for (const auto& k : bfs.visited) unseen.erase(k);
    }
    return classes;
}

}  // namespace surdstats
