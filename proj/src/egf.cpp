#include <boson/egf.hpp>

#include <algorithm>
#include <stdexcept>

namespace boson {

EgfSeries::EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("EgfSeries needs at least the n=0 coefficient");
}

EgfSeries EgfSeries::truncated(unsigned new_order) const {
    if (new_order >= order()) return *this;
    return EgfSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

EgfSeries EgfSeries::ones(unsigned order) {
    EgfSeries s(order);
    for (unsigned n = 0; n <= order; ++n) s[n] = 1;
    return s;
}

EgfSeries hadamard(const EgfSeries& f, const EgfSeries& g) {
    unsigned order = std::min(f.order(), g.order());
    EgfSeries r(order);
    for (unsigned n = 0; n <= order; ++n) r[n] = f[n] * g[n];
    return r;
}

EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g) {
    unsigned order = std::min(f.order(), g.order());
    EgfSeries r(order);
    for (unsigned n = 0; n <= order; ++n) {
        Rational acc = 0;
        for (unsigned k = 0; k <= n; ++k)
            acc += Rational(binomial(n, k)) * f[k] * g[n - k];
        r[n] = acc;
    }
    return r;
}

EgfSeries egf_add(const EgfSeries& f, const EgfSeries& g) {
    unsigned order = std::min(f.order(), g.order());
    EgfSeries r(order);
    for (unsigned n = 0; n <= order; ++n) r[n] = f[n] + g[n];
    return r;
}

EgfSeries egf_scale(const Rational& c, const EgfSeries& f) {
    EgfSeries r(f.order());
    for (unsigned n = 0; n <= f.order(); ++n) r[n] = c * f[n];
    return r;
}

EgfSeries egf_exp(const EgfSeries& g) {
    if (g[0] != 0) throw std::invalid_argument("egf_exp requires g_0 = 0");
    unsigned order = g.order();
    EgfSeries y(order);
    y[0] = 1;
    // Y_{n+1} = Sum_{k=0}^{n} C(n,k) g_{k+1} Y_{n-k}
    for (unsigned n = 0; n + 1 <= order; ++n) {
        Rational acc = 0;
        for (unsigned k = 0; k <= n; ++k)
            acc += Rational(binomial(n, k)) * g[k + 1] * y[n - k];
        y[n + 1] = acc;
    }
    return y;
}

EgfSeries egf_log(const EgfSeries& f) {
    if (f[0] != 1) throw std::invalid_argument("egf_log requires f_0 = 1");
    unsigned order = f.order();
    EgfSeries g(order);
    // f' = g'·f termwise: f_{n+1} = Sum_{k=0}^{n} C(n,k) g_{k+1} f_{n-k}
    for (unsigned n = 0; n + 1 <= order; ++n) {
        Rational acc = f[n + 1];
        for (unsigned k = 0; k + 1 <= n; ++k)
            acc -= Rational(binomial(n, k)) * g[k + 1] * f[n - k];
        g[n + 1] = acc;
    }
    return g;
}

EgfSeries egf_compose(const EgfSeries& f, const EgfSeries& g) {
    if (g[0] != 0) throw std::invalid_argument("egf_compose requires g_0 = 0");
    unsigned order = std::min(f.order(), g.order());
    EgfSeries r(order);
    r[0] = f[0];
    // Accumulate f_k · g^k/k!; g^k contributes nothing below degree k.
    EgfSeries gpow(order);
    gpow[0] = 1;
    Rational inv_kfact = 1;
    for (unsigned k = 1; k <= order; ++k) {
        gpow = egf_mul(gpow, g);
        inv_kfact /= k;
        if (f[k] == 0) continue;
        for (unsigned n = k; n <= order; ++n) r[n] += f[k] * inv_kfact * gpow[n];
    }
    return r;
}

}  // namespace boson
