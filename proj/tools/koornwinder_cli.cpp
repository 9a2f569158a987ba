#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <koornwinder/suites.hpp>

using json = nlohmann::ordered_json;
using namespace koorn;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kGenericity = 3 };

struct Options {
    int n = 2;
    std::string lambda;
    std::string params_file;
    int N = 0;
    int M = 40;
    int box = 2;
    std::uint64_t seed = 1;
    double tol_abs = 1e-8;
    double tol_rel = 1e-6;
    int trials = 20;
    bool table = false;
    bool sym = false;
    std::string suite;
    bool list = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

ParamSet load_params(const std::string& file) {
    if (file.empty()) return default_params();
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open params file '" + file + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("params file is not valid JSON: " + std::string(e.what()));
    }
    auto field = [&](const char* key) {
        if (!j.contains(key)) throw UsageError(std::string("params file lacks \"") + key + "\"");
        const auto& v = j.at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    try {
        return make_params(field("qh"), field("t0"), field("t0v"), field("t"), field("tn"), field("tnv"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

json params_json(const ParamSet& p) {
    return {{"qh", to_string(p.qh)},     {"t0", to_string(p.mult.t0)}, {"t0v", to_string(p.mult.t0v)},
            {"t", to_string(p.mult.t)},   {"tn", to_string(p.mult.tn)}, {"tnv", to_string(p.mult.tnv)}};
}

Weight parse_lambda(const std::string& text, int n) {
    if (text.empty()) throw UsageError("--lambda is required");
    Weight w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            w.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--lambda entry '" + item + "' is not an integer");
        }
    }
    if (static_cast<int>(w.size()) != n)
        throw UsageError("--lambda has " + std::to_string(w.size()) + " entries but --n is " + std::to_string(n));
    return w;
}

json poly_json(const KoornPoly& k) {
    json terms = json::array();
    for (const auto& [e, c] : k.poly.terms()) terms.push_back({{"exponent", e}, {"coeff", to_string(c)}});
    return {{"kind", kind_name(k.kind)},
            {"degree", k.degree},
            {"poly", k.poly.to_text()},
            {"laurent", terms},
            {"params", params_json(k.params)}};
}

void print_poly(const KoornPoly& k, bool table) {
    if (!table) {
        std::cout << poly_json(k).dump(2) << "\n";
        return;
    }
    std::cout << kind_name(k.kind) << " " << weight_to_string(k.degree) << "\n";
    for (auto it = k.poly.terms().rbegin(); it != k.poly.terms().rend(); ++it)
        std::cout << std::left << std::setw(16) << weight_to_string(it->first) << to_string(it->second) << "\n";
}

void print_comparison(const json& j, bool table) {
    if (!table) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, v] : j.items()) std::cout << std::left << std::setw(20) << key << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

GridSpec grid_from(const Options& o, const ParamSet& p) {
    GridSpec g;
    g.M = o.M;
    g.N = o.N > 0 ? o.N : auto_grid_size(p);
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return g;
}

void quadrature_regime(const ParamSet& p) {
    try {
        p.validate_for_quadrature();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int print_report(const Report& r, bool table) {
    if (table) {
        for (const auto& c : r.checks) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << std::left << std::setw(44) << c.name;
            if (c.tolerance > 0) std::cout << " err=" << c.error << " tol=" << c.tolerance;
            if (!c.detail.empty()) std::cout << "  " << c.detail;
            std::cout << "\n";
        }
        std::cout << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " passed\n";
    } else {
        json checks = json::array();
        for (const auto& c : r.checks) {
            json jc{{"name", c.name}, {"identity", c.identity}, {"pass", c.pass}};
            if (c.tolerance > 0) {
                jc["error"] = c.error;
                jc["tolerance"] = c.tolerance;
            }
            if (!c.detail.empty()) jc["detail"] = c.detail;
            if (c.witness) jc["witness"] = c.witness->to_text();
            checks.push_back(jc);
        }
        json out{{"suite", r.suite}, {"pass", r.all_pass()}, {"failures", r.failures()}, {"checks", checks}};
        std::cout << out.dump(2) << "\n";
    }
    return r.all_pass() ? kPass : kCheckFailed;
}

int run(const std::string& cmd, const Options& o) {
    if (o.n < 1) throw UsageError("--n must be positive");
    const ParamSet p = load_params(o.params_file);

    if (cmd == "compute-ns") {
        print_poly(compute_ns(parse_lambda(o.lambda, o.n), p), o.table);
        return kPass;
    }
    if (cmd == "compute-sym" || cmd == "compute-anti") {
        const Weight lam = parse_lambda(o.lambda, o.n);
        try {
            print_poly(cmd == "compute-sym" ? compute_sym(lam, p) : compute_antisym(lam, p), o.table);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return kPass;
    }
    if (cmd == "normalize") {
        const Weight lam = parse_lambda(o.lambda, o.n);
        if (o.sym && !is_dominant(lam)) throw UsageError("--sym needs a dominant weight");
        print_poly(o.sym ? normalize_Eplus(lam, p) : normalize_E(lam, p), o.table);
        return kPass;
    }
    if (cmd == "eval") {
        const Weight lam = parse_lambda(o.lambda, o.n);
        json j;
        bool match;
        if (o.sym) {
            if (!is_dominant(lam)) throw UsageError("--sym needs a dominant weight");
            const SymEvaluation e = eval_sym_routes(lam, p);
            const Rational solved = compute_sym(lam, p).poly.eval(x0(p, o.n));
            match = e.routes_agree() && solved == e.root_form;
            j = {{"quantity", "P+_lambda(x_0)"},
                 {"formula", to_string(e.root_form)},
                 {"formula_pochhammer", to_string(e.pochhammer_form)},
                 {"solver", to_string(solved)},
                 {"match", match}};
        } else {
            const Rational formula = eval_formula_ns(lam, p);
            const Rational solved = compute_ns(lam, p).poly.eval(inverse_point(x0(p, o.n)));
            match = formula == solved;
            j = {{"quantity", "P_lambda(x_0^-1)"}, {"formula", to_string(formula)}, {"solver", to_string(solved)}, {"match", match}};
        }
        print_comparison(j, o.table);
        return match ? kPass : kCheckFailed;
    }
    if (cmd == "norms") {
        const Weight lam = parse_lambda(o.lambda, o.n);
        quadrature_regime(p);
        const GridSpec g = grid_from(o, p);
        Rational formula;
        Complex solved;
        if (o.sym) {
            if (!is_dominant(lam)) throw UsageError("--sym needs a dominant weight");
            formula = norm_ratio_sym(lam, p);
            solved = quadrature_norm_ratio_sym(lam, p, g);
        } else {
            formula = norm_ratio_ns(lam, p);
            solved = quadrature_norm_ratio_ns(lam, p, g);
        }
        const double err = rel_err(solved, Complex(to_double(formula), 0));
        const bool match = err <= o.tol_rel;
        print_comparison({{"quantity", o.sym ? "<E+,E+>_+ / <1,1>_+" : "<E, E'> / <1,1>"},
                          {"formula", to_string(formula)},
                          {"formula_decimal", fmt_double(to_double(formula))},
                          {"solver", fmt_double(solved.real())},
                          {"solver_imag", fmt_double(solved.imag())},
                          {"rel_error", err},
                          {"N", g.N},
                          {"match", match}},
                         o.table);
        return match ? kPass : kCheckFailed;
    }
    if (cmd == "constant-term") {
        quadrature_regime(p);
        const GridSpec g = grid_from(o, p);
        const double formula = gustafson_ct(p, o.n, g.M);
        const Complex solved = quadrature_constant_term(o.n, p, g);
        const double err = rel_err(solved, Complex(formula, 0));
        const bool match = err <= o.tol_abs;
        print_comparison({{"quantity", "<1,1>_+ / |W|"},
                          {"formula", fmt_double(formula)},
                          {"solver", fmt_double(solved.real())},
                          {"rel_error", err},
                          {"N", g.N},
                          {"match", match}},
                         o.table);
        return match ? kPass : kCheckFailed;
    }
    if (cmd == "verify") {
        if (o.list) {
            if (o.table) {
                for (const auto& s : suite_table()) std::cout << std::left << std::setw(18) << s.name << s.identity << "\n";
            } else {
                json arr = json::array();
                for (const auto& s : suite_table()) arr.push_back({{"suite", s.name}, {"identity", s.identity}});
                std::cout << arr.dump(2) << "\n";
            }
            return kPass;
        }
        if (o.suite.empty()) throw UsageError("verify needs a suite name or --list");
        bool known = o.suite == "all";
        for (const auto& s : suite_table()) known = known || s.name == o.suite;
        if (!known) throw UsageError("unknown suite '" + o.suite + "' (see verify --list)");
        SuiteConfig c;
        c.n = o.n;
        c.params = p;
        c.box = o.box;
        c.seed = o.seed;
        c.trials = o.trials;
        c.tol.abs_zero = o.tol_abs;
        c.tol.rel = o.tol_rel;
        c.grid.M = o.M;
        c.grid.N = o.N;
        if (o.box < 0) throw UsageError("--box must be non-negative");
        if (o.trials < 1) throw UsageError("--trials must be positive");
        assert_distinct_spectrum(weights_in_box(o.n, o.box), p);
        if (o.suite == "all" || is_quadrature_suite(o.suite)) {
            quadrature_regime(p);
            grid_from(o, p);
        }
        return print_report(run_suite(o.suite, c), o.table);
    }
    throw UsageError("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact non-symmetric, symmetric and anti-symmetric Koornwinder polynomials"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sc) {
        sc->add_option("--n", o.n, "rank")->capture_default_str();
        sc->add_option("--params", o.params_file, "JSON file with qh, t0, t0v, t, tn, tnv as rationals");
        auto fmt = sc->add_option_group("format");
        fmt->add_flag("--json", "JSON output (default)");
        fmt->add_flag("--table", o.table, "plain table output");
        fmt->require_option(0, 1);
    };
    auto with_lambda = [&](CLI::App* sc) { sc->add_option("--lambda", o.lambda, "comma separated weight, e.g. 1,-1")->required(); };
    auto with_grid = [&](CLI::App* sc) {
        sc->add_option("--N", o.N, "torus grid points per dimension (default: chosen from the parameters)");
        sc->add_option("--M", o.M, "factors kept in infinite products")->capture_default_str();
        sc->add_option("--tol-abs", o.tol_abs, "tolerance for quantities that vanish")->capture_default_str();
        sc->add_option("--tol-rel", o.tol_rel, "relative tolerance")->capture_default_str();
    };

    auto* ns = app.add_subcommand("compute-ns", "non-symmetric polynomial P_lambda");
    common(ns), with_lambda(ns);
    auto* sym = app.add_subcommand("compute-sym", "symmetric polynomial P+_lambda, lambda dominant");
    common(sym), with_lambda(sym);
    auto* anti = app.add_subcommand("compute-anti", "anti-symmetric polynomial P-_lambda, lambda - kappa dominant");
    common(anti), with_lambda(anti);
    auto* norm = app.add_subcommand("normalize", "E(gamma_lambda) = P_lambda / P_lambda(x_0^-1), or E+ with --sym");
    common(norm), with_lambda(norm);
    norm->add_flag("--sym", o.sym, "normalize P+_lambda at x_0");
    auto* ev = app.add_subcommand("eval", "evaluation formula against the solved polynomial");
    common(ev), with_lambda(ev);
    ev->add_flag("--sym", o.sym, "P+_lambda(x_0) by both product routes");
    auto* nm = app.add_subcommand("norms", "norm formula against torus quadrature");
    common(nm), with_lambda(nm), with_grid(nm);
    nm->add_flag("--sym", o.sym, "symmetric norm");
    auto* ct = app.add_subcommand("constant-term", "<1,1>_+ / |W| against the infinite product");
    common(ct), with_grid(ct);
    auto* vf = app.add_subcommand("verify", "run an identity suite");
    common(vf), with_grid(vf);
    vf->add_option("suite", o.suite, "suite name, or all");
    vf->add_flag("--list", o.list, "list suites");
    vf->add_option("--box", o.box, "weights with sum |lambda_i| <= box")->capture_default_str();
    vf->add_option("--seed", o.seed, "random seed")->capture_default_str();
    vf->add_option("--trials", o.trials, "random trials per relation")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GenericityError& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return kGenericity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
}
