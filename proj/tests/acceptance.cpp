// One line per acceptance criterion, each with its tolerance fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <koornwinder/suites.hpp>

using namespace koorn;

namespace {

constexpr int kRank = 2;
constexpr int kBox = 3;
constexpr int kRelationTrials = 20;
constexpr double kRelationSeconds = 60;
constexpr double kEigenSeconds = 120;
constexpr double kNormRelationTol = 1e-6;
constexpr int kGridN = 64;
constexpr int kGridM = 40;
const QuadTolerances kQuad{1e-8, 1e-6, 1e-8, 1e-10};
constexpr double kResidueTol = 1e-6;
constexpr double kTransformTol = 1e-6;

struct Outcome {
    bool pass = true;
    std::string note;
};

int failures = 0;

void line(const std::string& id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("criterion %-3s %s  %-52s %7.2fs  %s\n", id.c_str(), o.pass ? "PASS" : "FAIL", title.c_str(), dt,
                o.note.c_str());
    std::fflush(stdout);
}

Outcome from(const Report& r) {
    std::size_t numeric = 0;
    double worst = 0;
    std::string worst_name;
    for (const auto& c : r.checks)
        if (c.tolerance > 0) {
            ++numeric;
            const double ratio = c.error / c.tolerance;
            if (ratio > worst || std::isnan(ratio)) {
                worst = ratio;
                worst_name = c.name;
            }
        }
    std::string note = std::to_string(r.checks.size()) + " checks";
    if (numeric) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2e", worst);
        note += ", worst err/tol " + std::string(buf) + " (" + worst_name + ")";
    }
    for (const auto& c : r.checks)
        if (!c.pass) {
            note += "; first failure: " + c.name + " " + c.detail;
            break;
        }
    return {r.all_pass(), note};
}

Outcome timed(const Report& r, double seconds, double limit) {
    Outcome o = from(r);
    if (seconds > limit) {
        o.pass = false;
        o.note += "; over the " + std::to_string(limit) + " s budget";
    }
    return o;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SuiteConfig exact_config(const ParamSet& p) {
    SuiteConfig c;
    c.n = kRank;
    c.params = p;
    c.box = kBox;
    c.seed = 7;
    c.trials = kRelationTrials;
    return c;
}

SuiteConfig quadrature_config() {
    SuiteConfig c = exact_config(quadrature_params());
    c.box = 2;
    c.grid.N = kGridN;
    c.grid.M = kGridM;
    c.tol = kQuad;
    return c;
}

}  // namespace

int main() {
    const ParamSet p = default_params();
    const std::vector<ParamSet> specs{p, quadrature_params(), make_params("2/3", "5/3", "3/7", "4/9", "7/2", "2/11")};

    line("1", "operator relations, 3 specializations", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        Report all;
        for (std::size_t k = 0; k < specs.size(); ++k) all.merge(check_relations(specs[k], kRank, kRelationTrials, 100 + k));
        return timed(all, since(t0), kRelationSeconds);
    });

    line("2", "eigen, monic, support, kernel dimension", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        clear_poly_cache();
        Report r = run_suite("eigen", exact_config(p));
        return timed(r, since(t0), kEigenSeconds);
    });

    line("3", "xi/eta, intertwiners, idempotents, C+- expansions", [&] { return from(run_suite("structure", exact_config(p))); });

    line("4", "duality on the full box", [&] { return from(run_suite("duality", exact_config(p))); });

    line("5", "evaluation formulas, both symmetric routes", [&] { return from(run_suite("evaluation", exact_config(p))); });

    line("6", "gWcf exact, norm relations", [&] {
        SuiteConfig c = exact_config(p);
        c.box = 2;
        Report r = run_suite("gwcf", c);
        for (const auto& nu : dominant_in_box(kRank, 1))
            r.merge(norm_relation_check(kappa(kRank) + nu, p, kGridM, kNormRelationTol));
        return from(r);
    });

    line("7", "quadrature: orthogonality, norms, CT, K, adjoint", [&] {
        const SuiteConfig c = quadrature_config();
        Report r;
        for (const char* s : {"biorthogonality", "norms", "constant-term", "adjoint"}) r.merge(run_suite(s, c));
        return from(r);
    });

    line("8", "iterated residues", [&] {
        const std::vector<Weight> lams{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        return from(residue_check(lams, quadrature_params(), quadrature_config().resolved_grid(), {1e-8, kResidueTol, 1e-8, 1e-10}));
    });

    line("9", "transform roundtrip, constant k", [&] {
        const SuiteConfig c = quadrature_config();
        QuadTolerances tol = kQuad;
        tol.rel = kTransformTol;
        return from(transform_roundtrip(weights_in_box(kRank, 1), c.params, c.resolved_grid(), tol));
    });

    line("10", "rank 3 smoke: relations and eigen", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        Report r = check_relations(p, 3, kRelationTrials, 31);
        const double rel_time = since(t0);
        const auto t1 = std::chrono::steady_clock::now();
        for (const Weight& plus : std::vector<Weight>{{0, 0, 0}, {1, 0, 0}})
            for (const auto& lam : weyl_orbit(plus)) r.merge(check_eigen(lam, p));
        Outcome o = from(r);
        const double eig_time = since(t1);
        if (rel_time > kRelationSeconds || eig_time > kEigenSeconds) {
            o.pass = false;
            o.note += "; over budget";
        }
        return o;
    });

    // The same quadrature identities at the default parameters need a finer grid than N = 64.
    line("7d", "quadrature at default parameters, N auto", [&] {
        SuiteConfig c = exact_config(p);
        c.box = 2;
        c.grid.N = 0;
        c.tol = kQuad;
        Report r;
        for (const char* s : {"biorthogonality", "norms", "constant-term", "adjoint"}) r.merge(run_suite(s, c));
        Outcome o = from(r);
        o.note = "N = " + std::to_string(c.resolved_grid().N) + ", " + o.note;
        return o;
    });

    std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASS", failures);
    return failures ? 1 : 0;
}
