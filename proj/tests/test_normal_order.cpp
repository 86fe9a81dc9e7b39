#include <boson/normal_order.hpp>

#include <boson/combinatorics.hpp>

#include <doctest.h>

#include "oracles.hpp"

#include <map>
#include <random>

using namespace boson;

namespace {

// Naive rewriter: repeatedly pick a random occurrence of the substring
// a·a† and apply a a† -> a† a + 1 until every word is normally ordered.
NormalForm rewrite_randomly(const BosonWord& w, std::mt19937& rng) {
    std::map<BosonWord, Rational> terms{{w, Rational(1)}};
    while (true) {
        // find a non-normal word
        auto it = terms.begin();
        std::vector<size_t> spots;
        for (; it != terms.end(); ++it) {
            spots.clear();
            const BosonWord& word = it->first;
            for (size_t i = 0; i + 1 < word.size(); ++i)
                if (word[i] == Letter::A && word[i + 1] == Letter::ADag) spots.push_back(i);
            if (!spots.empty()) break;
        }
        if (it == terms.end()) break;
        BosonWord word = it->first;
        Rational c = it->second;
        terms.erase(it);
        size_t i = spots[std::uniform_int_distribution<size_t>(0, spots.size() - 1)(rng)];
        BosonWord swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        BosonWord contracted = word;
        contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
        terms[swapped] += c;
        terms[contracted] += c;
    }
    NormalForm nf;
    for (const auto& [word, c] : terms) {
        unsigned creators = 0;
        for (Letter l : word) creators += (l == Letter::ADag);
        nf.add_term(creators, static_cast<unsigned>(word.size()) - creators, c);
    }
    return nf;
}

BosonWord random_word(std::mt19937& rng, unsigned maxlen) {
    std::uniform_int_distribution<unsigned> len(0, maxlen), bit(0, 1);
    BosonWord w(len(rng));
    for (auto& l : w) l = bit(rng) ? Letter::ADag : Letter::A;
    return w;
}

}  // namespace

TEST_CASE("normal_order_word: the commutator and Stirling patterns") {
    auto comm = normal_order_word(parse_word("aA"));
    CHECK(comm.coeff(1, 1) == 1);
    CHECK(comm.coeff(0, 0) == 1);
    CHECK(comm.terms().size() == 2);

    std::string s;
    for (unsigned n = 1; n <= 8; ++n) {
        s += "Aa";
        auto nf = normal_order_word(parse_word(s));
        CHECK(nf.terms().size() == n);
        for (unsigned k = 1; k <= n; ++k) CHECK(nf.coeff(k, k) == Rational(stirling2(n, k)));
    }
}

TEST_CASE("normal_order_word matches random rewriting (confluence)") {
    std::mt19937 rng(61);
    for (int t = 0; t < 40; ++t) {
        BosonWord w = random_word(rng, 10);
        CHECK(normal_order_word(w) == rewrite_randomly(w, rng));
    }
}

TEST_CASE("normal ordering is multiplicative") {
    std::mt19937 rng(67);
    for (int t = 0; t < 30; ++t) {
        BosonWord u = random_word(rng, 5), v = random_word(rng, 5);
        BosonWord uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(normal_order_word(uv) == nf_mul(normal_order_word(u), normal_order_word(v)));
    }
}

TEST_CASE("Fock action: rewriting equals letter-by-letter application") {
    auto nf = normal_order_word(parse_word("AAaAaa"));
    CHECK(apply_to_fock(nf, 2, 10) == apply_word_to_fock(parse_word("AAaAaa"), 2, 10));

    CHECK(apply_to_fock(NormalForm::identity(), 3, 5) ==
          std::vector<Rational>{0, 0, 0, 1, 0, 0});
    auto number_op = normal_order_word(parse_word("Aa"));
    auto v = apply_to_fock(number_op, 4, 6);
    CHECK(v[4] == 4);

    std::mt19937 rng(71);
    std::uniform_int_distribution<unsigned> mdist(0, 4);
    for (int t = 0; t < 200; ++t) {
        BosonWord w = random_word(rng, 6);
        unsigned m = mdist(rng);
        unsigned cutoff = m + static_cast<unsigned>(w.size()) + 1;
        CHECK(apply_to_fock(normal_order_word(w), m, cutoff) ==
              apply_word_to_fock(w, m, cutoff));
    }

    CHECK_THROWS_AS(apply_to_fock(NormalForm::monomial(3, 0), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(apply_to_fock(NormalForm::identity(), 5, 4), std::invalid_argument);
}

TEST_CASE("word_power_series: entries") {
    auto s = word_power_series(parse_word("Aa"), 5);
    CHECK(s.coeffs[0].is_identity());
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(s.coeffs[n].coeff(k, k) == Rational(stirling2(n, k)));

    // (a + a†)² = (a†)² + 2a†a + a² + 1; build the sum operator directly
    NormalForm sum;
    sum.add_term(1, 0, 1);
    sum.add_term(0, 1, 1);
    auto sq = nf_mul(sum, sum);
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.coeff(1, 1) == 2);
    CHECK(sq.coeff(0, 2) == 1);
    CHECK(sq.coeff(0, 0) == 1);
}

TEST_CASE("extract_vertices: the closed-form cases") {
    auto v = extract_vertices(parse_word("Aa"), 8);
    for (unsigned n = 1; n <= 8; ++n) CHECK(v.coeffs[n] == NormalForm::monomial(1, 1));

    auto v2 = extract_vertices(parse_word("AAa"), 5);
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(v2.coeffs[n] == NormalForm::monomial(n + 1, 1, Rational(factorial(n))));

    NormalForm sum;
    sum.add_term(1, 0, 1);
    sum.add_term(0, 1, 1);
    SymbolSeries s;
    s.coeffs.assign(7, NormalForm{});
    s.coeffs[0] = NormalForm::identity();
    for (unsigned n = 1; n <= 6; ++n) s.coeffs[n] = nf_mul(s.coeffs[n - 1], sum);
    auto v3 = extract_vertices(s);
    CHECK(v3.coeffs[1] == sum);
    CHECK(v3.coeffs[2] == NormalForm::identity());
    for (unsigned n = 3; n <= 6; ++n) CHECK(v3.coeffs[n].is_zero());
}

TEST_CASE("extract_vertices / symbol_exp roundtrip") {
    std::mt19937 rng(79);
    for (int t = 0; t < 10; ++t) {
        BosonWord w = random_word(rng, 4);
        auto s = word_power_series(w, 8);
        // the roundtrip lives in the commuting-symbol algebra
        CHECK(symbol_exp(extract_vertices(s)) == s);
    }
    SymbolSeries bad;
    bad.coeffs.assign(3, NormalForm{});
    CHECK_THROWS_AS(extract_vertices(bad), std::invalid_argument);
}

TEST_CASE("a†a vertex series matches the a†a(e^x - 1) expansion") {
    // x^n/n! coefficient of a†a(e^x - 1) is a†a for every n >= 1
    auto s = word_power_series(parse_word("Aa"), 8);
    auto v = extract_vertices(s);
    for (unsigned n = 1; n <= 8; ++n) CHECK(v.coeffs[n] == NormalForm::monomial(1, 1));
}

TEST_CASE("coherent_expectation") {
    CHECK(coherent_expectation(NormalForm::identity(), 1, 1) == 1);
    CHECK(coherent_expectation(NormalForm::monomial(1, 1), 1, 1) == 1);

    auto s = word_power_series(parse_word("Aa"), 6);
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(coherent_expectation(s.coeffs[n], 1, 1) == Rational(bell_number(n)));
}

TEST_CASE("word parsing") {
    CHECK(word_to_string(parse_word("aAaA")) == "aAaA");
    CHECK_THROWS_AS(parse_word("abc"), std::invalid_argument);
}
