#ifndef BOSON_NORMAL_ORDER_HPP
#define BOSON_NORMAL_ORDER_HPP

#include <boson/rational.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boson {

enum class Letter { A, ADag };

/// A finite word in the letters a, a†, applied left to right as written:
/// letters[0] is the leftmost (last-acting) operator.
using BosonWord = std::vector<Letter>;

/// Parses a word over {a, A}: 'a' annihilation, 'A' creation.
BosonWord parse_word(const std::string& s);
std::string word_to_string(const BosonWord& w);

/// Normally ordered operator Sum c_{ij} (a†)^i a^j with exact coefficients.
/// Zero coefficients are never stored.
class NormalForm {
  public:
    using Key = std::pair<unsigned, unsigned>;  // (creation power, annihilation power)
    using Terms = std::map<Key, Rational>;

    NormalForm() = default;
    static NormalForm identity();
    static NormalForm monomial(unsigned i, unsigned j, Rational c = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_identity() const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(unsigned i, unsigned j, const Rational& c);
    Rational coeff(unsigned i, unsigned j) const;

    NormalForm& operator+=(const NormalForm& other);
    NormalForm operator*(const Rational& c) const;
    bool operator==(const NormalForm&) const = default;

  private:
    Terms terms_;
};

/// Exact operator product, re-ordered to normal form:
/// a^j (a†)^k = Sum_s C(j,s) C(k,s) s! (a†)^{k-s} a^{j-s}.
NormalForm nf_mul(const NormalForm& lhs, const NormalForm& rhs);

/// Product with a† and a treated as commuting indeterminates (the double-dot
/// symbol algebra): exponents just add.
NormalForm symbol_mul(const NormalForm& lhs, const NormalForm& rhs);

/// Rewrites a word into normal form using aa† -> a†a + 1.
NormalForm normal_order_word(const BosonWord& w);

/// Series of operator coefficients of x^n/n!.
struct SymbolSeries {
    std::vector<NormalForm> coeffs;  // entry n, size order+1

    unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    bool operator==(const SymbolSeries&) const = default;
};

/// Entry n is normal_order_word(w^n): the x^n/n! coefficient of N[e^{xw}].
SymbolSeries word_power_series(const BosonWord& w, unsigned N);

/// Formal logarithm of a symbol series (entry 0 must be the identity), in
/// the commuting-symbol algebra: entry n is the vertex function V_n.
SymbolSeries extract_vertices(const SymbolSeries& s);
SymbolSeries extract_vertices(const BosonWord& w, unsigned N);

/// Formal exponential in the commuting-symbol algebra (inverse of
/// extract_vertices; entry 0 of the argument must be zero).
SymbolSeries symbol_exp(const SymbolSeries& v);

/// Action of a normal form on the un-normalized basis vector e_m = (a†)^m|0>,
/// as coordinates over e_0..e_cutoff (a e_m = m e_{m-1}, a† e_m = e_{m+1}).
/// Throws if any term raises above the cutoff.
std::vector<Rational> apply_to_fock(const NormalForm& nf, unsigned m, unsigned cutoff);

/// Letter-by-letter action of a raw word on e_m, same basis conventions.
std::vector<Rational> apply_word_to_fock(const BosonWord& w, unsigned m, unsigned cutoff);

/// Normal-ordered symbol at (zbar, z): Sum c_{ij} zbar^i z^j.
Rational coherent_expectation(const NormalForm& nf, const Rational& z, const Rational& zbar);

}  // namespace boson

#endif
