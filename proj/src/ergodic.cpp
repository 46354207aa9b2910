#include "surdstats/ergodic.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "surdstats/cf.hpp"

namespace surdstats {

TestFunction TestFunction::indicator(double u, double v) {
    if (!(0.0 <= u && u <= v && v <= 1.0))
        throw std::invalid_argument("TestFunction: indicator needs 0 <= u <= v <= 1");
    return {Kind::indicator, u, v};
}

TestFunction TestFunction::parse(const std::string& id) {
    if (id == "id") return identity();
    if (id == "log1p") return log1p();
    if (id.rfind("indicator:", 0) == 0) {
        std::istringstream in(id.substr(10));
        double u = 0, v = 0;
        char sep = 0;
        if ((in >> u >> sep >> v) && sep == ':' && in.eof()) return indicator(u, v);
    }
    throw std::invalid_argument("TestFunction: unknown id '" + id + "'");
}

double TestFunction::operator()(double x) const {
    switch (kind) {
        case Kind::indicator:
            return (u <= x && x <= v) ? 1.0 : 0.0;
        case Kind::log1p:
            return std::log1p(x);
        case Kind::identity:
            return x;
    }
    return 0.0;
}

double ergodic_average(const Surd& x0, const TestFunction& f, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("ergodic_average: N must be >= 1");

    // Orbit point k of the Gauss map is {x_k} = 1/x_{k+1} for the PQa
    // iterates x_k; states repeat, so one pass up to the first repeated
    // state yields every orbit value plus the exact cycle structure.
    std::vector<double> values;        // f at orbit points 0, 1, ...
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::size_t cycle_start = 0;

    Surd cur = x0;
    for (;;) {
        const auto [it, fresh] = seen.try_emplace({cur.p(), cur.q()}, values.size());
        if (!fresh) {
            cycle_start = it->second;
            break;
        }
        auto [a, next] = cf_step(cur);
        values.push_back(f(1.0 / next.to_double()));
        cur = std::move(next);
        if (values.size() == N) break;  // orbit longer than requested
    }

    if (values.size() == N && seen.size() == values.size()) {
        double sum = 0.0;
        for (double v : values) sum += v;
        return sum / static_cast<double>(N);
    }

    // Exact period weighting: preperiod prefix + whole cycles + remainder.
    const std::uint64_t pre = cycle_start;
    const std::uint64_t cycle_len = values.size() - cycle_start;
    double sum = 0.0;
    std::uint64_t k = 0;
    for (; k < pre && k < N; ++k) sum += values[k];
    if (N > pre) {
        double cycle_sum = 0.0;
        for (std::size_t i = cycle_start; i < values.size(); ++i) cycle_sum += values[i];
        const std::uint64_t remaining = N - pre;
        sum += static_cast<double>(remaining / cycle_len) * cycle_sum;
        for (std::uint64_t r = 0; r < remaining % cycle_len; ++r)
            sum += values[cycle_start + r];
    }
    return sum / static_cast<double>(N);
}

}  // namespace surdstats
