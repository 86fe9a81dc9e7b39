#include <boson/numerics.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace boson {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Adaptive Simpson on [lo, hi] with absolute tolerance tol.
double simpson_step(const std::function<double(double)>& f, double lo, double hi, double flo,
                    double fmid, double fhi, double whole, double tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    double flm = f(lm), frm = f(rm);
    double left = (mid - lo) / 6.0 * (flo + 4 * flm + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4 * frm + fhi);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15 * tol) return left + right + delta / 15.0;
    return simpson_step(f, lo, mid, flo, flm, fmid, left, tol / 2, depth - 1) +
           simpson_step(f, mid, hi, fmid, frm, fhi, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double mid = 0.5 * (lo + hi);
    double flo = f(lo), fmid = f(mid), fhi = f(hi);
    double whole = (hi - lo) / 6.0 * (flo + 4 * fmid + fhi);
    return simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

}  // namespace

double bell_asymptotic(unsigned n) {
    if (n < 3) throw std::invalid_argument("bell_asymptotic requires n >= 3");
    double r = std::log(static_cast<double>(n)) - std::log(std::log(static_cast<double>(n)));
    // log domain: values overflow double well before n = 100 otherwise
    double log_est = std::lgamma(n + 1.0) + (std::exp(r) - 1.0) - (n + 1.0) * std::log(r) -
                     0.5 * (std::log(2 * kPi) + r);
    return std::exp(log_est);
}

TruncationReport phi4_series(double a, double g, unsigned nmax) {
    TruncationReport rep;
    double term = 1.0;  // Γ(1/2)/√π
    double sum = 0.0;
    rep.terms.reserve(nmax + 1);
    rep.partial_sums.reserve(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) {
        rep.terms.push_back(term);
        sum += term;
        rep.partial_sums.push_back(sum);
        // t_{n+1}/t_n = (2n+1/2)(2n+3/2)/(n+1) · (-ag/24)
        term *= (2 * n + 0.5) * (2 * n + 1.5) / (n + 1.0) * (-a * g / 24.0);
    }
    rep.optimal_index = 0;
    for (unsigned n = 1; n <= nmax; ++n)
        if (std::fabs(rep.terms[n]) < std::fabs(rep.terms[rep.optimal_index]))
            rep.optimal_index = n;
    rep.first_omitted = (rep.optimal_index + 1 <= nmax)
                            ? std::fabs(rep.terms[rep.optimal_index + 1])
                            : std::fabs(term);
    if (g >= 0 && a > 0) {
        rep.reference = phi4_integral(a, g);
        rep.abs_error_at_optimal = std::fabs(rep.partial_sums[rep.optimal_index] - rep.reference);
    } else {
        rep.reference = std::numeric_limits<double>::quiet_NaN();
        rep.abs_error_at_optimal = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

double phi4_integral(double a, double g) {
    if (a <= 0) throw std::invalid_argument("phi4_integral requires a > 0");
    if (g < 0) throw std::invalid_argument("phi4_integral requires g >= 0");
    double sa = std::sqrt(a);
    // Gaussian tail: x²/√a > 45 makes the integrand < 3e-20.
    double X = std::sqrt(45.0 * sa);
    auto f = [&](double x) { return std::exp(-x * x / sa - g * x * x * x * x / 24.0); };
    double integral = 2.0 * integrate(f, 0.0, X, 1e-13);
    return integral / std::sqrt(kPi * sa);
}

double macdonald_closed(double a, double g) {
    if (a <= 0 || g <= 0) throw std::invalid_argument("macdonald_closed requires a, g > 0");
    double z = 3.0 / (a * g);
    // e^z K_ν(z) = ∫_0^∞ exp(-z(cosh t - 1)) cosh(νt) dt, ν = 1/4
    double tmax = std::acosh(1.0 + 50.0 / z);
    auto f = [&](double t) { return std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(0.25 * t); };
    double scaled_k = integrate(f, 0.0, tmax, 1e-13);
    return 2.0 / std::sqrt(2 * kPi) * std::sqrt(z) * scaled_k;
}

std::vector<double> divergence_ratio(const std::vector<double>& A) {
    std::vector<double> r;
    if (A.size() < 2) return r;
    r.reserve(A.size() - 1);
    for (size_t n = 0; n + 1 < A.size(); ++n) {
        if (A[n] == 0) throw std::invalid_argument("divergence_ratio: zero entry");
        r.push_back(A[n + 1] / ((n + 1.0) * A[n]));
    }
    return r;
}

}  // namespace boson
