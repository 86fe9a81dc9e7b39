#include <boson/combinatorics.hpp>
#include <boson/counting.hpp>
#include <boson/diagrams.hpp>
#include <boson/egf.hpp>
#include <boson/normal_order.hpp>
#include <boson/numerics.hpp>
#include <boson/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace boson;

namespace {

json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(to_string(r));
    return arr;
}

json series_to_json(const EgfSeries& s) {
    return json{{"order", s.order()}, {"coeffs", rationals_to_json(s.coeffs())}};
}

json normal_form_to_json(const NormalForm& nf) {
    json arr = json::array();
    for (const auto& [key, c] : nf.terms())
        arr.push_back(json::array({key.first, key.second, to_string(c)}));
    return arr;
}

std::vector<Rational> parse_rational_list(const std::string& csv, unsigned pad_to) {
    std::vector<Rational> out;
    if (csv == "ones") {
        out.assign(pad_to, Rational(1));
        return out;
    }
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(parse_rational(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    while (out.size() < pad_to) out.push_back(Rational(0));
    return out;
}

ModelSpec model_by_name(const std::string& name, unsigned N, const std::string& customL,
                        const std::string& customV) {
    if (name == "kerr2") return kerr_model(2, N);
    if (name == "kerr3") return kerr_model(3, N);
    if (name == "sf2") return superfluidity_model(N);
    if (name == "custom") return ModelSpec{parse_rational_list(customL, N), parse_rational_list(customV, N)};
    throw CLI::ValidationError("model", "unknown model: " + name);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_sequence(const std::string& family, unsigned N, unsigned M, const std::string& g1,
                 const std::string& gM, const std::string& x, const std::string& u) {
    json values = json::array();
    for (unsigned n = 0; n <= N; ++n) {
        if (family == "bell")
            values.push_back(bell_number(n).str());
        else if (family == "stirling2") {
            json row = json::array();
            for (unsigned k = 0; k <= n; ++k) row.push_back(stirling2(n, k).str());
            values.push_back(row);
        } else if (family == "bell-poly")
            values.push_back(to_string(bell_polynomial(n, parse_rational(u))));
        else if (family == "involution")
            values.push_back(involution_number(n).str());
        else if (family == "hkdf")
            values.push_back(to_string(hermite_kdf(n, M, parse_rational(g1), parse_rational(gM))));
        else if (family == "hermite-mod")
            values.push_back(to_string(modified_hermite(n, parse_rational(x))));
        else if (family == "mbell") {
            // row n: B_{n,k}(1,...,1) for k = 1..n
            json row = json::array();
            std::vector<Rational> ones(n == 0 ? 1 : n, Rational(1));
            for (unsigned k = 1; k <= n; ++k) row.push_back(to_string(multivariate_bell(n, k, ones)));
            values.push_back(row);
        } else
            throw CLI::ValidationError("family", "unknown family: " + family);
    }
    emit(json{{"family", family}, {"n", N}, {"values", values}});
    return 0;
}

int cmd_normal_order(const std::string& word, bool do_exp, unsigned order) {
    BosonWord w = parse_word(word);
    json out;
    out["word"] = word;
    out["normal_form"] = normal_form_to_json(normal_order_word(w));
    if (do_exp) {
        auto series = word_power_series(w, order);
        auto vertices = extract_vertices(series);
        json s = json::array(), v = json::array();
        for (const auto& nf : series.coeffs) s.push_back(normal_form_to_json(nf));
        for (const auto& nf : vertices.coeffs) v.push_back(normal_form_to_json(nf));
        out["exp_series"] = s;
        out["vertices"] = v;
    }
    emit(out);
    return 0;
}

int cmd_count(const std::string& L, const std::string& V, unsigned N) {
    ModelSpec model{parse_rational_list(L, N), parse_rational_list(V, N)};
    auto r = count(model, N);
    emit(json{{"order", N},
              {"A", rationals_to_json(r.A)},
              {"Y_L", rationals_to_json(r.yL)},
              {"Y_V", rationals_to_json(r.yV)}});
    return 0;
}

int cmd_kerr(unsigned M, unsigned N) {
    emit(json{{"M", M}, {"order", N}, {"A", rationals_to_json(kerr_sequence(M, N))}});
    return 0;
}

int cmd_zclosed(unsigned which, unsigned N) {
    EgfSeries closed = (which == 2) ? z2_closed(N) : z3_closed(N);
    EgfSeries series = (which == 2) ? z2_series(N) : z3_series(N);
    emit(json{{"which", which},
              {"closed", series_to_json(closed)},
              {"series", series_to_json(series)},
              {"agree", closed == series}});
    return closed == series ? 0 : 1;
}

int cmd_integrand(unsigned M, double beta, double lambda, double zsq, unsigned terms) {
    auto r = partition_integrand(M, beta, lambda, zsq, terms);
    emit(json{{"M", M},
              {"beta", beta},
              {"lambda", lambda},
              {"zsq", zsq},
              {"terms", terms},
              {"value", r.value},
              {"tail_bound", r.tail_bound}});
    return 0;
}

int cmd_graphs(unsigned n, const std::string& model_name, const std::string& emit_what,
               const std::string& L, const std::string& V) {
    ModelSpec model = model_by_name(model_name, std::max(n, 1u), L, V);
    json out{{"n", n}, {"model", model_name}};
    if (emit_what == "total" || emit_what == "classes")
        out["total"] = to_string(weighted_total(n, model));
    if (emit_what == "classes") {
        json classes = json::array();
        for (const auto& cls : diagram_classes(n, model)) {
            json sig = json::array();
            std::string text;
            for (const auto& [osize, vsize, shared] : cls.signature) {
                sig.push_back(json::array({osize, vsize, shared}));
                if (!text.empty()) text += " ";
                text += "o" + std::to_string(osize) + "-" + std::to_string(shared) + "-v" +
                        std::to_string(vsize);
            }
            classes.push_back(json{{"signature", sig},
                                   {"sketch", text},
                                   {"multiplicity", cls.multiplicity},
                                   {"weight", to_string(cls.weight)}});
        }
        out["classes"] = classes;
    }
    emit(out);
    return 0;
}

int cmd_phi4(double a, double g, unsigned nmax, const std::string& format) {
    auto rep = phi4_series(a, g, nmax);
    if (format == "csv") {
        std::cout << "n,term,partial_sum\n";
        for (size_t n = 0; n < rep.terms.size(); ++n)
            std::cout << n << "," << rep.terms[n] << "," << rep.partial_sums[n] << "\n";
        return 0;
    }
    emit(json{{"a", a},
              {"g", g},
              {"terms", rep.terms},
              {"partial_sums", rep.partial_sums},
              {"optimal_index", rep.optimal_index},
              {"first_omitted", rep.first_omitted},
              {"integral", rep.reference},
              {"closed_form", (g > 0 && a > 0) ? macdonald_closed(a, g) : 1.0},
              {"abs_error_at_optimal", rep.abs_error_at_optimal}});
    return 0;
}

int cmd_bell_asym(unsigned n) {
    json out{{"n", n}, {"estimate", bell_asymptotic(n)}};
    out["exact"] = bell_number(n).str();
    emit(out);
    return 0;
}

int cmd_diverge(const std::string& model_name, unsigned N, const std::string& format) {
    std::vector<double> a;
    if (model_name == "kerr2" || model_name == "kerr3") {
        for (const auto& x : kerr_sequence(model_name == "kerr2" ? 2 : 3, N))
            a.push_back(x.convert_to<double>());
    } else if (model_name == "exp") {
        a.assign(N + 1, 1.0);
    } else {
        throw CLI::ValidationError("model", "unknown model: " + model_name);
    }
    auto r = divergence_ratio(a);
    if (format == "csv") {
        std::cout << "n,ratio\n";
        for (size_t n = 0; n < r.size(); ++n) std::cout << n << "," << r[n] << "\n";
        return 0;
    }
    emit(json{{"model", model_name}, {"order", N}, {"ratios", r}});
    return 0;
}

int cmd_verify(const std::string& scope) {
    RunReport report = run_verify(scope);
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name},
                   {"expected", c.expected},
                   {"got", c.got},
                   {"status", c.pass ? "pass" : "fail"},
                   {"millis", c.millis}};
        if (!c.note.empty()) entry["note"] = c.note;
        checks.push_back(entry);
    }
    emit(json{{"scope", scope}, {"overall", report.overall ? "pass" : "fail"}, {"checks", checks}});
    return report.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact boson normal ordering, series counting and diagram enumeration"};
    app.require_subcommand(1);

    // sequence
    auto* seq = app.add_subcommand("sequence", "Named combinatorial sequences");
    std::string family, g1 = "1", gM = "1", x = "2", u = "1";
    unsigned seq_n = 8, seq_m = 2;
    seq->add_option("family", family,
                    "stirling2|bell|bell-poly|mbell|hkdf|hermite-mod|involution")
        ->required();
    seq->add_option("--n", seq_n, "highest index");
    seq->add_option("--M", seq_m, "order M for hkdf");
    seq->add_option("--g1", g1, "first argument for hkdf");
    seq->add_option("--gM", gM, "second argument for hkdf");
    seq->add_option("--x", x, "argument for hermite-mod");
    seq->add_option("--u", u, "argument for bell-poly");

    // normal-order
    auto* no = app.add_subcommand("normal-order", "Rewrite a word over {a,A} into normal form");
    std::string word;
    bool no_exp = false;
    unsigned no_order = 4;
    no->add_option("word", word, "word over a (annihilation) and A (creation)")->required();
    no->add_flag("--exp", no_exp, "also expand N[e^{xw}] and extract vertex functions");
    no->add_option("--order", no_order, "truncation order for --exp");

    // count
    auto* cnt = app.add_subcommand("count", "A_n = Y_n[L]·Y_n[V] for given weights");
    std::string cnt_L = "1", cnt_V = "ones";
    unsigned cnt_n = 8;
    cnt->add_option("--L", cnt_L, "comma list of L_m (or 'ones')");
    cnt->add_option("--V", cnt_V, "comma list of V_n (or 'ones')");
    cnt->add_option("--order", cnt_n, "truncation order");

    // kerr
    auto* kerr = app.add_subcommand("kerr", "A_n = H_n^{(M)}(1,1)·B_n");
    unsigned kerr_m = 2, kerr_n = 8;
    kerr->add_option("--M", kerr_m)->check(CLI::Range(2u, 16u));
    kerr->add_option("--order", kerr_n);

    // zclosed
    auto* zc = app.add_subcommand("zclosed", "Closed-form generating functions vs their series");
    unsigned zc_which = 2, zc_n = 12;
    zc->add_option("--which", zc_which)->check(CLI::IsMember({2, 3}));
    zc->add_option("--order", zc_n);

    // integrand
    auto* integ = app.add_subcommand("integrand", "Coherent-state Boltzmann-factor sum");
    unsigned integ_m = 2, integ_terms = 60;
    double integ_beta = 1.0, integ_lambda = 0.1, integ_zsq = 1.0;
    integ->add_option("--M", integ_m);
    integ->add_option("--beta", integ_beta)->check(CLI::PositiveNumber);
    integ->add_option("--lambda", integ_lambda);
    integ->add_option("--zsq", integ_zsq)->check(CLI::NonNegativeNumber);
    integ->add_option("--terms", integ_terms);

    // graphs
    auto* gr = app.add_subcommand("graphs", "Enumerate line diagrams");
    unsigned gr_n = 4;
    std::string gr_model = "kerr2", gr_emit = "classes", gr_L = "ones", gr_V = "ones";
    gr->add_option("--n", gr_n, "number of labeled lines");
    gr->add_option("--model", gr_model, "kerr2|kerr3|sf2|custom");
    gr->add_option("--emit", gr_emit)->check(CLI::IsMember({"classes", "total"}));
    gr->add_option("--L", gr_L, "custom L list");
    gr->add_option("--V", gr_V, "custom V list");

    // phi4
    auto* phi4 = app.add_subcommand("phi4", "Quartic zero-dimensional toy series vs integral");
    double phi4_a = 1.0, phi4_g = 0.1;
    unsigned phi4_nmax = 40;
    std::string phi4_emit = "json";
    phi4->add_option("--a", phi4_a)->check(CLI::PositiveNumber);
    phi4->add_option("--g", phi4_g)->check(CLI::NonNegativeNumber);
    phi4->add_option("--nmax", phi4_nmax);
    phi4->add_option("--emit", phi4_emit)->check(CLI::IsMember({"json", "csv"}));

    // bell-asym
    auto* ba = app.add_subcommand("bell-asym", "Asymptotic Bell-number estimate");
    unsigned ba_n = 50;
    ba->add_option("--n", ba_n)->check(CLI::Range(3u, 170u));

    // diverge
    auto* dv = app.add_subcommand("diverge", "d'Alembert ratios of A_n/n!");
    std::string dv_model = "kerr2", dv_emit = "json";
    unsigned dv_n = 20;
    dv->add_option("--model", dv_model, "kerr2|kerr3|exp");
    dv->add_option("--order", dv_n);
    dv->add_option("--emit", dv_emit)->check(CLI::IsMember({"json", "csv"}));

    // verify
    auto* vf = app.add_subcommand("verify", "Run the fixture suite");
    std::string vf_scope = "all";
    vf->add_option("scope", vf_scope,
                   "all|series-core|combinatorics|normal-order|counting|diagrams|numerics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (seq->parsed()) return cmd_sequence(family, seq_n, seq_m, g1, gM, x, u);
        if (no->parsed()) return cmd_normal_order(word, no_exp, no_order);
        if (cnt->parsed()) return cmd_count(cnt_L, cnt_V, cnt_n);
        if (kerr->parsed()) return cmd_kerr(kerr_m, kerr_n);
        if (zc->parsed()) return cmd_zclosed(zc_which, zc_n);
        if (integ->parsed())
            return cmd_integrand(integ_m, integ_beta, integ_lambda, integ_zsq, integ_terms);
        if (gr->parsed()) return cmd_graphs(gr_n, gr_model, gr_emit, gr_L, gr_V);
        if (phi4->parsed()) return cmd_phi4(phi4_a, phi4_g, phi4_nmax, phi4_emit);
        if (ba->parsed()) return cmd_bell_asym(ba_n);
        if (dv->parsed()) return cmd_diverge(dv_model, dv_n, dv_emit);
        if (vf->parsed()) return cmd_verify(vf_scope);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
