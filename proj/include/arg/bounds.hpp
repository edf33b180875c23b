// Closed-form rate, feasibility and girth bounds for the edge-growth
// construction, plus the consistency predicate for stall reports.
#pragma once

#include <string>

namespace arg {

struct StallEvent;

struct Rational {
    long num = 0;
    long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

// Design rate 1 - p/q, reduced. Lower bound on the true code rate.
Rational design_rate(int p, int q);

struct Feasibility {
    double threshold = 0.0;  // (m+3) / (3(p+q))
    int max_d = 0;           // floor(threshold)
};

// Largest d for which phase completion is guaranteed.
Feasibility feasibility_threshold(int m, int p, int q);

// 2 * log_{pq d^2} (1 + m(pq d^2 - 1) / (2(pd + 1))).
// Every successfully constructed graph has girth >= this value.
// Requires pq d^2 > 1.
double girth_lower_bound(int m, int p, int q, int d);

// A stall at phase (i,j) can only be genuine when (m+3)/3 < i+j (odd edge)
// or (n+3)/3 < i+j (even edge); anything else is an implementation bug.
// Evaluated exactly in integers.
bool stall_consistency_check(const StallEvent& event, int n, int m);

struct BoundReport {
    Rational design_rate;
    double feasibility_threshold = 0.0;
    int max_guaranteed_d = 0;
    double girth_lower_bound = 0.0;
};

BoundReport bound_report(int m, int p, int q, int d);

// Flat key-value block, one "key value" pair per line.
std::string to_text(const BoundReport& report);

}  // namespace arg
