#ifndef BOSON_TESTS_ORACLES_HPP
#define BOSON_TESTS_ORACLES_HPP

// Brute-force reference computations, independent of the library code paths
// they are used to check.

#include <boson/rational.hpp>

#include <random>
#include <vector>

namespace boson::oracles {

// Counts set partitions of {1..n} into exactly k blocks by direct recursion
// over element placements.
inline unsigned long long count_partitions_into(unsigned n, unsigned k) {
    // place elements one at a time; state = number of used blocks
    std::vector<std::vector<long long>> memo(n + 1, std::vector<long long>(k + 1, -1));
    auto rec = [&](auto&& self, unsigned left, unsigned used) -> unsigned long long {
        if (left == 0) return used == k ? 1 : 0;
        auto& m = memo[left][used];
        if (m >= 0) return static_cast<unsigned long long>(m);
        unsigned long long total = self(self, left - 1, used) * used;  // join existing block
        if (used < k) total += self(self, left - 1, used + 1);         // open a new block
        m = static_cast<long long>(total);
        return total;
    };
    return rec(rec, n, 0);
}

inline unsigned long long count_all_partitions(unsigned n) {
    unsigned long long total = 0;
    for (unsigned k = (n == 0 ? 0 : 1); k <= n; ++k) total += count_partitions_into(n, k);
    return n == 0 ? 1 : total;
}

// Ordinary polynomial in x with rational coefficients, coefficient of x^m at
// entry m; enough machinery to check the differential-operator product
// formula and polynomial composition term by term.
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b, size_t max_len) {
    Poly r(std::min(max_len, a.size() + b.size() - 1), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < r.size() && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_derivative(const Poly& a) {
    if (a.size() <= 1) return Poly{Rational(0)};
    Poly r(a.size() - 1);
    for (size_t m = 1; m < a.size(); ++m) r[m - 1] = Rational(m) * a[m];
    return r;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    return Rational(num(rng), den(rng));
}

}  // namespace boson::oracles

#endif
