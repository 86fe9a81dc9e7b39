#ifndef BOSON_COUNTING_HPP
#define BOSON_COUNTING_HPP

#include <boson/egf.hpp>
#include <boson/rational.hpp>

#include <utility>
#include <vector>

namespace boson {

/// A counting problem: multilegged-propagator strengths L_1..L_N and vertex
/// strengths V_1..V_N (same truncation length).
struct ModelSpec {
    std::vector<Rational> L;
    std::vector<Rational> V;
};

/// L_1 = L_M = 1, others 0; V_n = 1 for all n.
ModelSpec kerr_model(unsigned M, unsigned N);
/// L_2 = 1, others 0; V_1 = 2, V_2 = 1, others 0.
ModelSpec superfluidity_model(unsigned N);

struct CountResult {
    std::vector<Rational> A;   // A_0..A_N
    std::vector<Rational> yL;  // Y_0..Y_N of L
    std::vector<Rational> yV;  // Y_0..Y_N of V
};

/// A_n = Y_n[L] · Y_n[V], A_0 = 1.
CountResult count(const ModelSpec& model, unsigned N);

/// A_n = H_n^{(M)}(1,1) · B_n for n = 0..N. Requires M >= 2.
std::vector<Rational> kerr_sequence(unsigned M, unsigned N);

/// Z_1 = exp(2λ + λ²/2): coefficients h_n(2).
EgfSeries z1_series(unsigned N);
/// Sum_n h_{2n}(2)/n! (λ²/2)^n as a λ-EGF (coefficient k is A_k).
EgfSeries z2_series(unsigned N);
/// Formal expansion of (1-λ²)^{-1/2} exp(2λ²/(1-λ²)); equals z2_series.
EgfSeries z2_closed(unsigned N);
/// Sum_n h_{3n}(2)/n! (λ³/6)^n as a λ-EGF.
EgfSeries z3_series(unsigned N);
/// The M=3 closed form: (1-φλ³)^{-1/2} exp(φ³λ³/6 - φ⁴λ⁶/8)
/// · 2F0(1/6,5/6;-;3λ⁶/(2(1-φλ³)³)) with φ = (1-sqrt(1-4λ³))/λ³, expanded
/// as an exact formal series; equals z3_series.
EgfSeries z3_closed(unsigned N);

struct IntegrandValue {
    double value;
    double tail_bound;  // bound on the dropped k > K tail
};

/// K-truncated coherent-state sum
///   e^{-|z|²} Sum_{k<=K} |z|^{2k}/k! exp[-β(kλ + (kλ)^M/M!)].
/// Requires beta > 0.
IntegrandValue partition_integrand(unsigned M, double beta, double lambda, double zsq,
                                   unsigned K);

/// Two independent exact routes to the λ^n/n! coefficient of the
/// coherent-state sum: closed-sum forms (hermite_kdf · Stirling sum) on the
/// left, EGF-expansion forms (egf_exp · Bell recurrence) on the right. Both
/// equal H_n^{(M)}(-β,-β)·B_n(|z|²).
std::pair<Rational, Rational> integrand_coefficient_identity(unsigned M, const Rational& beta,
                                                             unsigned n, const Rational& zsq);

}  // namespace boson

#endif
