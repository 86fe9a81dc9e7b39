#ifndef BOSON_NUMERICS_HPP
#define BOSON_NUMERICS_HPP

#include <vector>

namespace boson {

/// Partial sums of an asymptotic series plus the smallest-term truncation data.
struct TruncationReport {
    std::vector<double> terms;
    std::vector<double> partial_sums;
    unsigned optimal_index = 0;  // argmin |term| over the computed range
    double first_omitted = 0;    // |term| at optimal_index + 1 (0 if out of range)
    double reference = 0;        // quadrature value when available, else NaN
    double abs_error_at_optimal = 0;
};

/// B_n ~ n! exp(exp r - 1) / (r^{n+1} sqrt(2π e^r)) with r = log n - log log n.
/// Requires n >= 3.
double bell_asymptotic(unsigned n);

/// Partial sums of (1/sqrt(π)) Sum_n Γ(2n+1/2)/n! (-ag/4!)^n.
TruncationReport phi4_series(double a, double g, unsigned nmax);

/// I(a,g) = 1/sqrt(π a^{1/2}) ∫ exp(-x²/sqrt(a) - gx⁴/4!) dx by adaptive
/// quadrature. Requires a > 0, g >= 0.
double phi4_integral(double a, double g);

/// (2/sqrt(2π)) sqrt(3/ag) exp(3/ag) K_{1/4}(3/ag), with K computed from its
/// integral representation (exponentially scaled internally).
double macdonald_closed(double a, double g);

/// r_n = A_{n+1}/((n+1)·A_n); unbounded growth signals a divergent EGF.
std::vector<double> divergence_ratio(const std::vector<double>& A);

}  // namespace boson

#endif
