#include <boson/combinatorics.hpp>

#include <stdexcept>

namespace boson {

BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("stirling2 requires k <= n");
    // S(n,k) = k·S(n-1,k) + S(n-1,k-1), S(0,0) = 1
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        unsigned top = std::min(i, k);
        for (unsigned j = top; j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

BigInt bell_number(unsigned n) {
    // B_{n+1} = Sum C(n,k) B_k
    std::vector<BigInt> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (unsigned k = 0; k < m; ++k) acc += binomial(m - 1, k) * b[k];
        b[m] = acc;
    }
    return b[n];
}

Rational bell_polynomial(unsigned n, const Rational& u) {
    if (n == 0) return 1;
    Rational acc = 0;
    Rational up = 1;
    for (unsigned k = 1; k <= n; ++k) {
        up *= u;
        acc += Rational(stirling2(n, k)) * up;
    }
    return acc;
}

namespace {

// Recursive sweep over partition vectors (nu_1..nu_n) with the Eq-style
// double constraint: remaining line budget `n` and block budget `k`.
void partition_vectors(unsigned j, unsigned n_left, unsigned k_left, Rational term,
                       const std::vector<Rational>& g, unsigned max_part, Rational& acc) {
    if (k_left == 0) {
        if (n_left == 0) acc += term;
        return;
    }
    if (j > max_part || n_left < k_left) return;  // parts of size >= j can't fill
    for (unsigned nu = 0; nu * j <= n_left && nu <= k_left; ++nu) {
        Rational t = term;
        if (nu > 0) {
            if (g[j - 1] == 0) break;  // factor g_j^nu vanishes for all nu >= 1
            t *= rat_pow(g[j - 1], nu) / Rational(factorial(nu) * int_pow(factorial(j), nu));
        }
        partition_vectors(j + 1, n_left - nu * j, k_left - nu, t, g, max_part, acc);
    }
}

}  // namespace

Rational multivariate_bell(unsigned n, unsigned k, const std::vector<Rational>& g) {
    if (k < 1 || k > n) throw std::invalid_argument("multivariate_bell requires 1 <= k <= n");
    if (g.size() < n - k + 1)
        throw std::invalid_argument("multivariate_bell: g must supply g_1..g_{n-k+1}");
    Rational acc = 0;
    partition_vectors(1, n, k, Rational(factorial(n)), g, n - k + 1, acc);
    return acc;
}

Rational complete_bell(unsigned n, const std::vector<Rational>& g) {
    if (n == 0) return 1;
    if (g.size() < n) throw std::invalid_argument("complete_bell: g must supply g_1..g_n");
    // Y_{m+1} = Sum C(m,k) g_{k+1} Y_{m-k}
    std::vector<Rational> y(n + 1);
    y[0] = 1;
    for (unsigned m = 0; m < n; ++m) {
        Rational acc = 0;
        for (unsigned k = 0; k <= m; ++k) acc += Rational(binomial(m, k)) * g[k] * y[m - k];
        y[m + 1] = acc;
    }
    return y[n];
}

std::vector<Rational> complete_bell_all(const std::vector<Rational>& g) {
    unsigned n = static_cast<unsigned>(g.size());
    std::vector<Rational> y(n + 1);
    y[0] = 1;
    for (unsigned m = 0; m < n; ++m) {
        Rational acc = 0;
        for (unsigned k = 0; k <= m; ++k) acc += Rational(binomial(m, k)) * g[k] * y[m - k];
        y[m + 1] = acc;
    }
    return std::vector<Rational>(y.begin() + 1, y.end());
}

std::vector<Rational> bell_inverse(const std::vector<Rational>& Y) {
    unsigned n = static_cast<unsigned>(Y.size());
    // log-series recurrence, the closed form being
    // g_n = Sum_j (-1)^{j-1} (j-1)! B_{n,j}(Y_1,...)
    std::vector<Rational> g(n);
    std::vector<Rational> f(n + 1);  // f_0 = 1, f_m = Y_m
    f[0] = 1;
    for (unsigned m = 1; m <= n; ++m) f[m] = Y[m - 1];
    for (unsigned m = 0; m < n; ++m) {
        Rational acc = f[m + 1];
        for (unsigned k = 0; k + 1 <= m; ++k)
            acc -= Rational(binomial(m, k)) * g[k] * f[m - k];
        g[m] = acc;
    }
    return g;
}

Rational hermite_kdf(unsigned n, unsigned M, const Rational& g1, const Rational& gM) {
    if (M < 2) throw std::invalid_argument("hermite_kdf requires M >= 2");
    Rational acc = 0;
    BigInt nfact = factorial(n);
    BigInt mfact = factorial(M);
    for (unsigned r = 0; M * r <= n; ++r) {
        unsigned rem = n - M * r;
        Rational term = Rational(nfact, factorial(rem) * factorial(r) * int_pow(mfact, r));
        term *= rat_pow(g1, rem) * rat_pow(gM, r);  // 0^0 = 1 via rat_pow(.,0) = 1
        acc += term;
    }
    return acc;
}

Rational modified_hermite(unsigned n, const Rational& x) {
    Rational prev = 1, cur = x;
    if (n == 0) return prev;
    for (unsigned m = 1; m < n; ++m) {
        Rational next = x * cur + Rational(m) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

bool homogeneity_check(unsigned n, unsigned k, const Rational& a, const Rational& b,
                       const std::vector<Rational>& g) {
    std::vector<Rational> scaled(g.size());
    Rational bp = 1;
    for (size_t j = 0; j < g.size(); ++j) {
        bp *= b;
        scaled[j] = a * bp * g[j];
    }
    return multivariate_bell(n, k, scaled) == rat_pow(a, k) * rat_pow(b, n) * multivariate_bell(n, k, g);
}

BigInt involution_number(unsigned n) {
    // t_0 = t_1 = 1, t_{n} = t_{n-1} + (n-1) t_{n-2}
    BigInt prev = 1, cur = 1;
    if (n == 0) return prev;
    for (unsigned m = 2; m <= n; ++m) {
        BigInt next = cur + BigInt(m - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace boson
