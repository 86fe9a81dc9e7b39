#include <boson/normal_order.hpp>

#include <stdexcept>

namespace boson {

BosonWord parse_word(const std::string& s) {
    BosonWord w;
    w.reserve(s.size());
    for (char c : s) {
        if (c == 'a')
            w.push_back(Letter::A);
        else if (c == 'A')
            w.push_back(Letter::ADag);
        else
            throw std::invalid_argument(std::string("word letters must be 'a' or 'A', got '") + c + "'");
    }
    return w;
}

std::string word_to_string(const BosonWord& w) {
    std::string s;
    for (Letter l : w) s += (l == Letter::A) ? 'a' : 'A';
    return s;
}

NormalForm NormalForm::identity() { return monomial(0, 0); }

NormalForm NormalForm::monomial(unsigned i, unsigned j, Rational c) {
    NormalForm nf;
    nf.add_term(i, j, c);
    return nf;
}

bool NormalForm::is_identity() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

void NormalForm::add_term(unsigned i, unsigned j, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational NormalForm::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

NormalForm& NormalForm::operator+=(const NormalForm& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

NormalForm NormalForm::operator*(const Rational& c) const {
    NormalForm r;
    if (c == 0) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
    return r;
}

NormalForm nf_mul(const NormalForm& lhs, const NormalForm& rhs) {
    NormalForm r;
    for (const auto& [lk, lc] : lhs.terms()) {
        auto [i, j] = lk;
        for (const auto& [rk, rc] : rhs.terms()) {
            auto [k, l] = rk;
            Rational c = lc * rc;
            unsigned smax = std::min(j, k);
            for (unsigned s = 0; s <= smax; ++s) {
                Rational comm = Rational(binomial(j, s) * binomial(k, s) * factorial(s));
                r.add_term(i + k - s, j + l - s, c * comm);
            }
        }
    }
    return r;
}

NormalForm symbol_mul(const NormalForm& lhs, const NormalForm& rhs) {
    NormalForm r;
    for (const auto& [lk, lc] : lhs.terms())
        for (const auto& [rk, rc] : rhs.terms())
            r.add_term(lk.first + rk.first, lk.second + rk.second, lc * rc);
    return r;
}

NormalForm normal_order_word(const BosonWord& w) {
    NormalForm r = NormalForm::identity();
    for (Letter l : w) {
        NormalForm letter =
            (l == Letter::A) ? NormalForm::monomial(0, 1) : NormalForm::monomial(1, 0);
        r = nf_mul(r, letter);
    }
    return r;
}

SymbolSeries word_power_series(const BosonWord& w, unsigned N) {
    SymbolSeries s;
    s.coeffs.resize(N + 1);
    s.coeffs[0] = NormalForm::identity();
    if (N == 0) return s;
    NormalForm wnf = normal_order_word(w);
    for (unsigned n = 1; n <= N; ++n) s.coeffs[n] = nf_mul(s.coeffs[n - 1], wnf);
    return s;
}

SymbolSeries extract_vertices(const SymbolSeries& s) {
    if (s.coeffs.empty() || !s.coeffs[0].is_identity())
        throw std::invalid_argument("extract_vertices: entry 0 must be the identity");
    unsigned order = s.order();
    SymbolSeries v;
    v.coeffs.resize(order + 1);
    // f_{n+1} = Sum C(n,k) v_{k+1} f_{n-k}, solved for v in the commuting algebra
    for (unsigned n = 0; n + 1 <= order; ++n) {
        NormalForm acc = s.coeffs[n + 1];
        for (unsigned k = 0; k + 1 <= n; ++k) {
            NormalForm prod = symbol_mul(v.coeffs[k + 1], s.coeffs[n - k]);
            acc += prod * Rational(-binomial(n, k));
        }
        v.coeffs[n + 1] = acc;
    }
    return v;
}

SymbolSeries extract_vertices(const BosonWord& w, unsigned N) {
    if (N < 1) throw std::invalid_argument("extract_vertices requires N >= 1");
    return extract_vertices(word_power_series(w, N));
}

SymbolSeries symbol_exp(const SymbolSeries& v) {
    if (v.coeffs.empty() || !v.coeffs[0].is_zero())
        throw std::invalid_argument("symbol_exp: entry 0 must be zero");
    unsigned order = v.order();
    SymbolSeries s;
    s.coeffs.resize(order + 1);
    s.coeffs[0] = NormalForm::identity();
    for (unsigned n = 0; n + 1 <= order; ++n) {
        NormalForm acc;
        for (unsigned k = 0; k <= n; ++k) {
            NormalForm prod = symbol_mul(v.coeffs[k + 1], s.coeffs[n - k]);
            acc += prod * Rational(binomial(n, k));
        }
        s.coeffs[n + 1] = acc;
    }
    return s;
}

std::vector<Rational> apply_to_fock(const NormalForm& nf, unsigned m, unsigned cutoff) {
    if (m > cutoff) throw std::invalid_argument("apply_to_fock: m exceeds cutoff");
    std::vector<Rational> out(cutoff + 1, Rational(0));
    for (const auto& [key, c] : nf.terms()) {
        auto [i, j] = key;
        if (j > m) continue;  // a^j annihilates e_m
        // a^j e_m = m(m-1)...(m-j+1) e_{m-j}
        BigInt fall = 1;
        for (unsigned t = 0; t < j; ++t) fall *= m - t;
        unsigned target = m - j + i;
        if (target > cutoff)
            throw std::invalid_argument("apply_to_fock: result exceeds cutoff");
        out[target] += c * Rational(fall);
    }
    return out;
}

std::vector<Rational> apply_word_to_fock(const BosonWord& w, unsigned m, unsigned cutoff) {
    std::vector<Rational> state(cutoff + 1, Rational(0));
    if (m > cutoff) throw std::invalid_argument("apply_word_to_fock: m exceeds cutoff");
    state[m] = 1;
    // rightmost letter acts first
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        std::vector<Rational> next(cutoff + 1, Rational(0));
        for (unsigned k = 0; k <= cutoff; ++k) {
            if (state[k] == 0) continue;
            if (*it == Letter::A) {
                if (k > 0) next[k - 1] += state[k] * Rational(k);
            } else {
                if (k + 1 > cutoff)
                    throw std::invalid_argument("apply_word_to_fock: result exceeds cutoff");
                next[k + 1] += state[k];
            }
        }
        state = std::move(next);
    }
    return state;
}

Rational coherent_expectation(const NormalForm& nf, const Rational& z, const Rational& zbar) {
    Rational acc = 0;
    for (const auto& [key, c] : nf.terms())
        acc += c * rat_pow(zbar, key.first) * rat_pow(z, key.second);
    return acc;
}

}  // namespace boson
