#include <boson/counting.hpp>

#include <boson/combinatorics.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace boson {

ModelSpec kerr_model(unsigned M, unsigned N) {
    ModelSpec m;
    m.L.assign(N, Rational(0));
    m.V.assign(N, Rational(1));
    if (N >= 1) m.L[0] = 1;
    if (M >= 1 && M <= N) m.L[M - 1] = 1;
    return m;
}

ModelSpec superfluidity_model(unsigned N) {
    ModelSpec m;
    m.L.assign(N, Rational(0));
    m.V.assign(N, Rational(0));
    if (N >= 2) m.L[1] = 1;
    if (N >= 1) m.V[0] = 2;
    if (N >= 2) m.V[1] = 1;
    return m;
}

CountResult count(const ModelSpec& model, unsigned N) {
    if (model.L.size() < N || model.V.size() < N)
        throw std::invalid_argument("count: model lists must cover indices 1..N");
    CountResult r;
    r.yL.assign(1, Rational(1));
    r.yV.assign(1, Rational(1));
    auto yl = complete_bell_all(std::vector<Rational>(model.L.begin(), model.L.begin() + N));
    auto yv = complete_bell_all(std::vector<Rational>(model.V.begin(), model.V.begin() + N));
    r.yL.insert(r.yL.end(), yl.begin(), yl.end());
    r.yV.insert(r.yV.end(), yv.begin(), yv.end());
    r.A.resize(N + 1);
    for (unsigned n = 0; n <= N; ++n) r.A[n] = r.yL[n] * r.yV[n];
    return r;
}

std::vector<Rational> kerr_sequence(unsigned M, unsigned N) {
    if (M < 2) throw std::invalid_argument("kerr_sequence requires M >= 2");
    std::vector<Rational> a(N + 1);
    for (unsigned n = 0; n <= N; ++n)
        a[n] = hermite_kdf(n, M, 1, 1) * Rational(bell_number(n));
    return a;
}

EgfSeries z1_series(unsigned N) {
    EgfSeries s(N);
    for (unsigned n = 0; n <= N; ++n) s[n] = modified_hermite(n, 2);
    return s;
}

namespace {

// Ordinary (Taylor) truncated series in λ: entry k is the coefficient of λ^k.
using OrdSeries = std::vector<Rational>;

OrdSeries ord_mul(const OrdSeries& a, const OrdSeries& b, unsigned N) {
    OrdSeries r(N + 1, Rational(0));
    for (unsigned i = 0; i <= N && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; i + j <= N && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Sum_k c_k z^k for a series z with z[0] = 0; c supplied lazily long enough
// to exhaust order N.
OrdSeries ord_apply(const std::vector<Rational>& c, const OrdSeries& z, unsigned N) {
    OrdSeries r(N + 1, Rational(0));
    OrdSeries zp(N + 1, Rational(0));
    zp[0] = 1;
    for (unsigned k = 0; k < c.size(); ++k) {
        if (c[k] != 0)
            for (unsigned n = 0; n <= N; ++n) r[n] += c[k] * zp[n];
        zp = ord_mul(zp, z, N);
    }
    return r;
}

// (1 + v)^alpha for v with v[0] = 0, alpha rational.
OrdSeries ord_binpow(const OrdSeries& v, const Rational& alpha, unsigned N) {
    std::vector<Rational> c(N + 1);
    Rational b = 1;
    for (unsigned k = 0; k <= N; ++k) {
        c[k] = b;
        b *= (alpha - Rational(k)) / Rational(k + 1);
    }
    return ord_apply(c, v, N);
}

OrdSeries ord_exp(const OrdSeries& v, unsigned N) {
    std::vector<Rational> c(N + 1);
    Rational f = 1;
    for (unsigned k = 0; k <= N; ++k) {
        c[k] = f;
        f /= k + 1;
    }
    return ord_apply(c, v, N);
}

// Divides by λ^s; the s lowest coefficients must vanish.
OrdSeries ord_shift_down(const OrdSeries& a, unsigned s) {
    for (unsigned k = 0; k < s && k < a.size(); ++k)
        if (a[k] != 0) throw std::logic_error("ord_shift_down: nonzero low-order coefficient");
    if (a.size() <= s) return OrdSeries{Rational(0)};
    return OrdSeries(a.begin() + s, a.end());
}

EgfSeries ord_to_egf(const OrdSeries& a, unsigned N) {
    EgfSeries s(N);
    BigInt nf = 1;
    for (unsigned n = 0; n <= N; ++n) {
        if (n > 0) nf *= n;
        s[n] = (n < a.size()) ? a[n] * Rational(nf) : Rational(0);
    }
    return s;
}

}  // namespace

EgfSeries z2_series(unsigned N) {
    EgfSeries s(N);
    for (unsigned n = 0; 2 * n <= N; ++n) {
        // coefficient of λ^{2n} is h_{2n}(2)/(n! 2^n); as EGF entry, ·(2n)!
        s[2 * n] = modified_hermite(2 * n, 2) * Rational(factorial(2 * n), factorial(n) * int_pow(2, n));
    }
    return s;
}

EgfSeries z2_closed(unsigned N) {
    OrdSeries lam2(N + 1, Rational(0));
    if (N >= 2) lam2[2] = -1;  // v = -λ²
    OrdSeries pref = ord_binpow(lam2, Rational(-1, 2), N);  // (1-λ²)^{-1/2}
    // 2λ²/(1-λ²) = 2λ²·(1-λ²)^{-1}
    OrdSeries inv = ord_binpow(lam2, Rational(-1), N);
    OrdSeries arg(N + 1, Rational(0));
    for (unsigned k = 0; k + 2 <= N; ++k) arg[k + 2] = Rational(2) * inv[k];
    OrdSeries z = ord_mul(pref, ord_exp(arg, N), N);
    return ord_to_egf(z, N);
}

EgfSeries z3_series(unsigned N) {
    EgfSeries s(N);
    for (unsigned n = 0; 3 * n <= N; ++n)
        s[3 * n] = modified_hermite(3 * n, 2) * Rational(factorial(3 * n), factorial(n) * int_pow(6, n));
    return s;
}

EgfSeries z3_closed(unsigned N) {
    // Work one power of λ³ past N so the φ = p/λ³ divisions stay exact.
    unsigned W = N + 6;
    OrdSeries v(W + 1, Rational(0));
    if (W >= 3) v[3] = -4;  // v = -4λ³
    OrdSeries sqrt1m4 = ord_binpow(v, Rational(1, 2), W);  // sqrt(1-4λ³)
    OrdSeries p(W + 1, Rational(0));                       // p = φλ³ = 1 - sqrt(1-4λ³)
    for (unsigned k = 0; k <= W; ++k) p[k] = -sqrt1m4[k];
    p[0] += 1;

    OrdSeries minus_p(W + 1, Rational(0));
    for (unsigned k = 0; k <= W; ++k) minus_p[k] = -p[k];
    OrdSeries pref = ord_binpow(minus_p, Rational(-1, 2), W);  // (1-φλ³)^{-1/2}

    OrdSeries p3 = ord_mul(ord_mul(p, p, W), p, W);
    OrdSeries p4 = ord_mul(p3, p, W);
    OrdSeries phi3l3 = ord_shift_down(p3, 6);  // φ³λ³ = p³/λ⁶
    OrdSeries phi4l6 = ord_shift_down(p4, 6);  // φ⁴λ⁶ = p⁴/λ⁶
    OrdSeries exparg(W + 1, Rational(0));
    for (unsigned k = 0; k <= W; ++k) {
        Rational t = 0;
        if (k < phi3l3.size()) t += phi3l3[k] / 6;
        if (k < phi4l6.size()) t -= phi4l6[k] / 8;
        exparg[k] = t;
    }
    OrdSeries expo = ord_exp(exparg, W);

    // 2F0(1/6,5/6;-;z) with z = 3λ⁶/(2(1-φλ³)³), Pochhammer term ratio
    // (1/6+k)(5/6+k)/(k+1).
    OrdSeries inv3 = ord_binpow(minus_p, Rational(-3), W);
    OrdSeries hyparg(W + 1, Rational(0));
    for (unsigned k = 0; k + 6 <= W; ++k) hyparg[k + 6] = Rational(3, 2) * inv3[k];
    std::vector<Rational> hc(W / 6 + 2);
    Rational term = 1;
    for (unsigned k = 0; k < hc.size(); ++k) {
        hc[k] = term;
        term *= (Rational(1, 6) + k) * (Rational(5, 6) + k) / Rational(k + 1);
    }
    OrdSeries hyp = ord_apply(hc, hyparg, W);

    OrdSeries z = ord_mul(ord_mul(pref, expo, W), hyp, W);
    return ord_to_egf(z, N);
}

IntegrandValue partition_integrand(unsigned M, double beta, double lambda, double zsq,
                                   unsigned K) {
    if (beta <= 0) throw std::invalid_argument("partition_integrand requires beta > 0");
    if (zsq < 0) throw std::invalid_argument("partition_integrand requires |z|^2 >= 0");
    double mfact = 1;
    for (unsigned i = 2; i <= M; ++i) mfact *= i;
    double value = 0;
    double log_poisson = -zsq;  // log of e^{-|z|²}|z|^{2k}/k!
    for (unsigned k = 0; k <= K; ++k) {
        if (k > 0) log_poisson += std::log(zsq) - std::log(static_cast<double>(k));
        double kl = k * lambda;
        double expo = -beta * (kl + std::pow(kl, static_cast<double>(M)) / mfact);
        value += std::exp(log_poisson + expo);
    }
    // Remaining Poisson mass; the Boltzmann factor is <= 1 for λ >= 0.
    double tail = 0;
    if (zsq > 0) {
        double t = std::exp(log_poisson) * zsq / (K + 1);
        double ratio = zsq / (K + 2);
        tail = (ratio < 1) ? t / (1 - ratio) : std::numeric_limits<double>::infinity();
    }
    return {value, tail};
}

std::pair<Rational, Rational> integrand_coefficient_identity(unsigned M, const Rational& beta,
                                                             unsigned n, const Rational& zsq) {
    // Route 1: closed sums.
    Rational lhs = hermite_kdf(n, M, -beta, -beta) * bell_polynomial(n, zsq);
    // Route 2: EGF expansion of exp(-βx - βx^M/M!) for the Hermite factor and
    // the binomial recurrence B_{m+1}(u) = u Sum C(m,k) B_k(u) for the Bell
    // factor.
    Rational h;
    {
        EgfSeries g(n == 0 ? 1 : n);
        g[1] = -beta;
        if (M <= g.order()) g[M] += -beta;
        h = egf_exp(g)[n];
    }
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 0; m < n; ++m) {
        Rational acc = 0;
        for (unsigned k = 0; k <= m; ++k) acc += Rational(binomial(m, k)) * b[k];
        b[m + 1] = zsq * acc;
    }
    Rational rhs = h * b[n];
    return {lhs, rhs};
}

}  // namespace boson
