#include "arg/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "arg/construct.hpp"

namespace arg {

Rational design_rate(int p, int q) {
    if (p <= 0 || p >= q) {
        throw std::invalid_argument("design_rate: requires 0 < p < q");
    }
    const long g = std::gcd(static_cast<long>(q - p), static_cast<long>(q));
    return Rational{(q - p) / g, q / g};
}

Feasibility feasibility_threshold(int m, int p, int q) {
    if (m <= 1 || p <= 0 || p >= q) {
        throw std::invalid_argument("feasibility_threshold: requires m > 1 and 0 < p < q");
    }
    const double threshold = static_cast<double>(m + 3) / (3.0 * (p + q));
    return Feasibility{threshold, static_cast<int>(std::floor(threshold))};
}

double girth_lower_bound(int m, int p, int q, int d) {
    const double base = static_cast<double>(p) * q * d * d;
    if (base <= 1.0) {
        throw std::invalid_argument("girth_lower_bound: pq*d^2 must exceed 1");
    }
    const double inner = 1.0 + m * (base - 1.0) / (2.0 * (static_cast<double>(p) * d + 1.0));
    return 2.0 * std::log(inner) / std::log(base);
}

bool stall_consistency_check(const StallEvent& event, int n, int m) {
    // Odd edges stall against the right side (bound in m), even against the
    // left (bound in n). Strict inequality, exact in integers.
    const long side = event.e % 2 != 0 ? m : n;
    return side + 3 < 3L * (event.i + event.j);
}

BoundReport bound_report(int m, int p, int q, int d) {
    const Feasibility f = feasibility_threshold(m, p, q);
    return BoundReport{design_rate(p, q), f.threshold, f.max_d, girth_lower_bound(m, p, q, d)};
}

std::string to_text(const BoundReport& report) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "design_rate %s\nfeasibility_threshold %.6f\nmax_guaranteed_d %d\n"
                  "girth_lower_bound %.6f\n",
                  report.design_rate.str().c_str(), report.feasibility_threshold,
                  report.max_guaranteed_d, report.girth_lower_bound);
    return buf;
}

}  // namespace arg
