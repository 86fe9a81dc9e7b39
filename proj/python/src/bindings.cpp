#include <boson/combinatorics.hpp>
#include <boson/counting.hpp>
#include <boson/diagrams.hpp>
#include <boson/egf.hpp>
#include <boson/normal_order.hpp>
#include <boson/numerics.hpp>
#include <boson/rational.hpp>
#include <boson/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace boson;

namespace {

// Exact values cross the boundary as "p" / "p/q" strings; the python wrapper
// turns them into fractions.Fraction.
std::vector<Rational> parse_list(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

std::vector<std::string> format_list(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

ModelSpec make_model(const std::vector<std::string>& L, const std::vector<std::string>& V) {
    ModelSpec m;
    m.L = parse_list(L);
    m.V = parse_list(V);
    return m;
}

std::vector<std::tuple<unsigned, unsigned, std::string>> nf_to_py(const NormalForm& nf) {
    std::vector<std::tuple<unsigned, unsigned, std::string>> out;
    for (const auto& [key, c] : nf.terms()) out.emplace_back(key.first, key.second, to_string(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_bosoncalc, m) {
    m.doc() = "exact boson normal ordering, Bell polynomials, and diagram counting";

    m.def("stirling", [](unsigned n, unsigned k) { return stirling2(n, k).str(); });
    m.def("bell", [](unsigned n) { return bell_number(n).str(); });
    m.def("involutions", [](unsigned n) { return involution_number(n).str(); });
    m.def("hermite_kdf", [](unsigned n, unsigned M, const std::string& g1, const std::string& gM) {
        return to_string(hermite_kdf(n, M, parse_rational(g1), parse_rational(gM)));
    });
    m.def("modified_hermite", [](unsigned n, const std::string& x) {
        return to_string(modified_hermite(n, parse_rational(x)));
    });
    m.def("complete_bell", [](const std::vector<std::string>& g) {
        auto y = complete_bell_all(parse_list(g));
        y.insert(y.begin(), Rational(1));
        return format_list(y);
    });
    m.def("bell_inverse", [](const std::vector<std::string>& y) {
        return format_list(bell_inverse(parse_list(y)));
    });

    m.def("normal_order",
          [](const std::string& word) { return nf_to_py(normal_order_word(parse_word(word))); });
    m.def("word_powers", [](const std::string& word, unsigned order) {
        auto s = word_power_series(parse_word(word), order);
        std::vector<std::vector<std::tuple<unsigned, unsigned, std::string>>> out;
        for (const auto& nf : s.coeffs) out.push_back(nf_to_py(nf));
        return out;
    });
    m.def("vertices", [](const std::string& word, unsigned order) {
        auto v = extract_vertices(parse_word(word), order);
        std::vector<std::vector<std::tuple<unsigned, unsigned, std::string>>> out;
        for (const auto& nf : v.coeffs) out.push_back(nf_to_py(nf));
        return out;
    });

    m.def("count",
          [](const std::vector<std::string>& L, const std::vector<std::string>& V, unsigned order) {
              auto cr = count(make_model(L, V), order);
              py::dict d;
              d["A"] = format_list(cr.A);
              d["YL"] = format_list(cr.yL);
              d["YV"] = format_list(cr.yV);
              return d;
          });
    m.def("kerr_sequence",
          [](unsigned M, unsigned order) { return format_list(kerr_sequence(M, order)); });
    m.def("zclosed", [](unsigned M, unsigned order) {
        if (M == 1) return format_list(z1_series(order).coeffs());
        if (M == 2) return format_list(z2_closed(order).coeffs());
        if (M == 3) return format_list(z3_closed(order).coeffs());
        throw std::invalid_argument("zclosed: closed forms exist for M in {1,2,3}");
    });
    m.def("partition_integrand",
          [](unsigned M, double beta, double lambda, double zsq, unsigned K) {
              auto r = partition_integrand(M, beta, lambda, zsq, K);
              return std::make_pair(r.value, r.tail_bound);
          });
    m.def("integrand_coefficients",
          [](unsigned M, const std::string& beta, unsigned n, const std::string& zsq) {
              auto [lhs, rhs] =
                  integrand_coefficient_identity(M, parse_rational(beta), n, parse_rational(zsq));
              return std::make_pair(to_string(lhs), to_string(rhs));
          });

    m.def("weighted_total",
          [](unsigned n, const std::vector<std::string>& L, const std::vector<std::string>& V) {
              return to_string(weighted_total(n, make_model(L, V)));
          });
    m.def("diagram_classes",
          [](unsigned n, const std::vector<std::string>& L, const std::vector<std::string>& V) {
              py::list out;
              for (const auto& cls : diagram_classes(n, make_model(L, V))) {
                  py::dict d;
                  d["signature"] = cls.signature;
                  d["multiplicity"] = cls.multiplicity;
                  d["weight"] = to_string(cls.weight);
                  out.append(d);
              }
              return out;
          });

    m.def("bell_asymptotic", &bell_asymptotic);
    m.def("phi4_series", [](double a, double g, unsigned nmax) {
        auto rep = phi4_series(a, g, nmax);
        py::dict d;
        d["terms"] = rep.terms;
        d["partial_sums"] = rep.partial_sums;
        d["optimal_index"] = rep.optimal_index;
        d["first_omitted"] = rep.first_omitted;
        d["reference"] = rep.reference;
        d["abs_error_at_optimal"] = rep.abs_error_at_optimal;
        return d;
    });
    m.def("phi4_integral", &phi4_integral);
    m.def("macdonald_closed", &macdonald_closed);
    m.def("divergence_ratio", &divergence_ratio);

    m.def("verify", [](const std::string& scope) {
        py::list out;
        for (const auto& c : run_verify(scope).checks) {
            py::dict d;
            d["name"] = c.name;
            d["expected"] = c.expected;
            d["got"] = c.got;
            d["pass"] = c.pass;
            d["note"] = c.note;
            out.append(d);
        }
        return out;
    });
}
