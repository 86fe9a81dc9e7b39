#ifndef BOSON_EGF_HPP
#define BOSON_EGF_HPP

#include <boson/rational.hpp>

#include <cstddef>
#include <vector>

namespace boson {

/// Truncated exponential generating function Sum f_n x^n/n!.
/// Coefficients are stored as f_n (sequence values), not f_n/n!, so the
/// integer sequences of interest appear verbatim.
class EgfSeries {
  public:
    explicit EgfSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}
    explicit EgfSeries(std::vector<Rational> coeffs);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Rational& operator[](unsigned n) const { return coeffs_.at(n); }
    Rational& operator[](unsigned n) { return coeffs_.at(n); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const EgfSeries&) const = default;

    EgfSeries truncated(unsigned new_order) const;

    static EgfSeries ones(unsigned order);  // egf of exp(x)

  private:
    std::vector<Rational> coeffs_;
};

/// Termwise coefficient product; the result order is the minimum of the two.
EgfSeries hadamard(const EgfSeries& f, const EgfSeries& g);

/// Cauchy (EGF) product: (fg)_n = Sum C(n,k) f_k g_{n-k}.
EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g);

EgfSeries egf_add(const EgfSeries& f, const EgfSeries& g);
EgfSeries egf_scale(const Rational& c, const EgfSeries& f);

/// exp(g) for g with g_0 = 0; coefficient n is the complete Bell polynomial
/// Y_n[g_1,...,g_n], with Y_0 = 1. Throws std::invalid_argument on g_0 != 0.
EgfSeries egf_exp(const EgfSeries& g);

/// log(f) for f with f_0 = 1; inverse of egf_exp on the common order.
/// Throws std::invalid_argument on f_0 != 1.
EgfSeries egf_log(const EgfSeries& f);

/// Composition f(g(x)) for g with g_0 = 0; coefficient n is
/// f_0·[n=0] + Sum_k B_{n,k}(g_1,...) f_k. Throws on g_0 != 0.
EgfSeries egf_compose(const EgfSeries& f, const EgfSeries& g);

}  // namespace boson

#endif
