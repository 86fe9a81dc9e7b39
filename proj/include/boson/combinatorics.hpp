#ifndef BOSON_COMBINATORICS_HPP
#define BOSON_COMBINATORICS_HPP

#include <boson/rational.hpp>

#include <vector>

namespace boson {

/// Stirling number of the second kind S(n,k); requires 0 <= k <= n.
BigInt stirling2(unsigned n, unsigned k);

/// Bell number B_n.
BigInt bell_number(unsigned n);

/// Bell (exponential) polynomial B_n(u) = Sum_k S(n,k) u^k; B_0 = 1.
Rational bell_polynomial(unsigned n, const Rational& u);

/// Partial multivariate Bell polynomial B_{n,k}(g_1,...,g_{n-k+1}), as the
/// sum over partition vectors nu with Sum j·nu_j = n, Sum nu_j = k of
/// n!/prod[nu_j!(j!)^{nu_j}] · prod g_j^{nu_j}. Requires 1 <= k <= n and
/// g.size() >= n-k+1.
Rational multivariate_bell(unsigned n, unsigned k, const std::vector<Rational>& g);

/// Complete Bell polynomial Y_n[g] = Sum_{k=1}^n B_{n,k}(g); Y_0 = 1.
/// g holds g_1..g_m with m >= n (extra entries ignored, missing treated as
/// an error).
Rational complete_bell(unsigned n, const std::vector<Rational>& g);

/// All Y_1..Y_N for g_1..g_N in one pass (recurrence, O(N^2)).
std::vector<Rational> complete_bell_all(const std::vector<Rational>& g);

/// Inverse of complete_bell: given Y_1..Y_N, the unique g_1..g_N with
/// Y_n[g] = Y_n for all n.
std::vector<Rational> bell_inverse(const std::vector<Rational>& Y);

/// Two-variable Hermite polynomial H_n^{(M)}(g1,gM), the coefficient
/// sequence of exp(g1·x + gM·x^M/M!):
///   H_n^{(M)} = n! Sum_{r=0}^{[n/M]} g1^{n-Mr} gM^r / ((n-Mr)! r! (M!)^r).
/// Requires M >= 2; 0^0 = 1.
Rational hermite_kdf(unsigned n, unsigned M, const Rational& g1, const Rational& gM);

/// h_n(x): h_0 = 1, h_1 = x, h_{n+1} = x·h_n + n·h_{n-1}.
/// h_n(2) is the coefficient sequence of exp(2x + x^2/2).
Rational modified_hermite(unsigned n, const Rational& x);

/// Checks B_{n,k}(a·b·g_1, a·b^2·g_2, ...) == a^k b^n B_{n,k}(g).
bool homogeneity_check(unsigned n, unsigned k, const Rational& a, const Rational& b,
                       const std::vector<Rational>& g);

/// Involution numbers H_n^{(2)}(1,1): partitions into singletons and pairs.
BigInt involution_number(unsigned n);

}  // namespace boson

#endif
