#include "surdstats/cf.hpp"

#include <map>

namespace surdstats {

Int surd_floor(const Surd& x) {
    const Int s = isqrt(x.d());
    if (x.q() > 0) return floor_div(x.p() + s, x.q());
    // Q < 0: P + sqrt(d) lies strictly between P+s and P+s+1, and dividing
    // by a negative Q flips the interval; no integer can sit strictly
    // inside it, so the floor is floor((P+s+1)/Q).
    return floor_div(x.p() + s + 1, x.q());
}

std::pair<Int, Surd> cf_step(const Surd& x) {
    const Int a = surd_floor(x);
    Int np = a * x.q() - x.p();
    Int nq = exact_div(x.d() - np * np, x.q());
    return {a, Surd::unchecked(std::move(np), std::move(nq), x.d())};
}

namespace {

// Reduced iff 0 < P <= s, s+1-P <= Q <= s+P (integer form of
// 0 < P < sqrt(d), sqrt(d)-P < Q < sqrt(d)+P, using irrationality).
bool reduced_state(const Int& P, const Int& Q, const Int& s) {
    return P > 0 && P <= s && Q >= s + 1 - P && Q <= s + P;
}

}  // namespace

CFExpansion cf_expand(const Surd& x) {
    const Int s = isqrt(x.d());
    CFExpansion out;
    std::vector<Int> digits;
    std::map<std::pair<Int, Int>, std::size_t> seen;

    Surd cur = x;
    for (;;) {
        if (reduced_state(cur.p(), cur.q(), s)) {
            auto [it, fresh] = seen.try_emplace({cur.p(), cur.q()}, digits.size());
            if (!fresh) {
                const std::size_t start = it->second;
                out.preperiod.assign(digits.begin(), digits.begin() + start);
                out.period.assign(digits.begin() + start, digits.end());
                return out;
            }
        }
        auto [a, next] = cf_step(cur);
        digits.push_back(std::move(a));
        cur = std::move(next);
    }
}

std::vector<std::pair<Int, Int>> convergents(const std::vector<Int>& digits, std::size_t n) {
    if (n == 0 || n > digits.size())
        throw std::invalid_argument("convergents: need 1 <= n <= #digits");
    std::vector<std::pair<Int, Int>> out;
    out.reserve(n);
    Int p2 = 0, p1 = 1;  // p_{-2}, p_{-1}
    Int q2 = 1, q1 = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Int pk = digits[k] * p1 + p2;
        Int qk = digits[k] * q1 + q2;
        out.emplace_back(pk, qk);
        p2 = std::move(p1);
        p1 = std::move(pk);
        q2 = std::move(q1);
        q1 = std::move(qk);
    }
    return out;
}

std::vector<std::pair<Int, Int>> convergents(const CFExpansion& e, std::size_t n) {
    std::vector<Int> digits;
    digits.reserve(n);
    for (std::size_t k = 0; k < n; ++k) digits.push_back(e.digit(k));
    return convergents(digits, n);
}

IntMatrix2 period_matrix(const std::vector<Int>& digits) {
    IntMatrix2 m = IntMatrix2::identity();
    for (const Int& a : digits) m = m * IntMatrix2::digit(a);
    return m;
}

}  // namespace surdstats
