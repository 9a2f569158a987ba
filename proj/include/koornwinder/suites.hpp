#pragma once

#include <functional>
#include <string>
#include <vector>

#include "torus.hpp"

namespace koorn {

struct SuiteConfig {
    int n = 2;
    ParamSet params = default_params();
    GridSpec grid{};  // grid.N == 0 picks N from the parameters
    int box = 2;
    std::uint64_t seed = 1;
    int trials = 20;
    QuadTolerances tol{};

    GridSpec resolved_grid() const {
        GridSpec g = grid;
        if (g.N == 0) g.N = auto_grid_size(params);
        g.validate();
        return g;
    }
};

// All lambda in Z^n with sum |lambda_i| <= box, in a fixed order.
inline std::vector<Weight> weights_in_box(int n, int box) {
    std::vector<Weight> out;
    Weight cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = -left; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - std::abs(v));
        }
    };
    rec(rec, 0, box);
    std::sort(out.begin(), out.end(), linear_extension_less);
    return out;
}

inline std::vector<Weight> dominant_in_box(int n, int box) {
    std::vector<Weight> out;
    for (const auto& w : weights_in_box(n, box))
        if (is_dominant(w)) out.push_back(w);
    return out;
}

namespace detail {

inline Report run_structure(const SuiteConfig& c) {
    Report r;
    const ParamSet& p = c.params;
    for (const auto& lam : weights_in_box(c.n, c.box)) {
        for (int i = 1; i <= c.n; ++i) {
            r.merge(check_Ti_action(lam, i, p));
            r.merge(check_intertwiner(lam, i, p));
        }
        if (is_dominant(lam)) {
            r.merge(check_clm(lam, p));
            r.merge(check_central_character(lam, p));
        }
    }
    std::vector<Weight> regular{kappa(c.n)};
    if (c.box >= 2) regular.push_back(kappa(c.n) + unit_weight(c.n, 0));
    for (const auto& lam : regular) {
        r.merge(check_antisym_character(lam, p));
        r.merge(check_clm(lam, p));
    }
    std::mt19937_64 rng(c.seed);
    const int cases = std::max(1, std::min(c.trials, 5));
    for (int k = 0; k < cases; ++k) r.merge(check_idempotents(random_laurent(c.n, rng, 2, 3), p));
    return r;
}

inline Report run_duality(const SuiteConfig& c) {
    Report r;
    const auto box = weights_in_box(c.n, c.box);
    for (const auto& lam : box)
        for (const auto& mu : box) r.merge(check_duality(lam, mu, c.params));
    for (const auto& lam : box)
        for (int i = 0; i <= c.n; ++i) r.merge(check_spectral_action(lam, i, c.params));
    return r;
}

inline Report run_biorthogonality(const SuiteConfig& c, bool diagonals) {
    Report full = biorthogonality_check(weights_in_box(c.n, std::min(c.box, 2)), c.params, c.resolved_grid(), c.tol);
    Report r;
    for (const auto& chk : full.checks) {
        const bool diag = chk.name.rfind("norm ", 0) == 0 || chk.name.rfind("symmetric norm ", 0) == 0;
        if (diag == diagonals) r.checks.push_back(chk);
    }
    return r;
}

}  // namespace detail

struct SuiteInfo {
    std::string name;
    std::string identity;
    std::function<Report(const SuiteConfig&)> run;
};

inline const std::vector<SuiteInfo>& suite_table() {
    static const std::vector<SuiteInfo> table{
        {"relations", "quadratic, braid, double affine compatibility, commutation and Lusztig relations of the difference-reflection operators",
         [](const SuiteConfig& c) { return check_relations(c.params, c.n, c.trials, c.seed); }},
        {"eigen", "P_lambda is monic, supported on the downset of lambda, and Y_i P_lambda = gamma_lambda^{e_i} P_lambda with a one-dimensional joint kernel",
         [](const SuiteConfig& c) {
             Report r;
             for (const auto& lam : weights_in_box(c.n, c.box)) r.merge(check_eigen(lam, c.params));
             return r;
         }},
        {"structure", "T_i P_lambda expansion, intertwiners S_i, idempotents C_+-, expansions of P+- over the P_mu, central character",
         detail::run_structure},
        {"duality", "E(gamma_lambda; x_mu^-1) = E~(x_mu; gamma_lambda^-1), its symmetric form, and T_i acting on the spectral parameter",
         detail::run_duality},
        {"evaluation", "P_lambda(x_0^-1) and P+_lambda(x_0) against the product formulas, both symmetric routes",
         [](const SuiteConfig& c) {
             Report r;
             for (const auto& lam : weights_in_box(c.n, c.box)) r.merge(check_evaluation(lam, c.params));
             return r;
         }},
        {"gwcf", "P-_{lambda+kappa}(t) = chi(t) P+_lambda(q t)",
         [](const SuiteConfig& c) {
             Report r;
             for (const auto& lam : dominant_in_box(c.n, std::min(c.box, 2))) r.merge(check_gwcf(lam, c.params));
             return r;
         }},
        {"normrelations", "t_sigma^2 <P+,P+>_+(t) / <P+_{lambda-kappa},P+_{lambda-kappa}>_+(q t) = prod v~_a(gamma^-1) / v~_a(gamma)",
         [](const SuiteConfig& c) {
             Report r;
             for (const auto& nu : dominant_in_box(c.n, 1))
                 r.merge(norm_relation_check(kappa(c.n) + nu, c.params, c.grid.M, c.tol.rel));
             return r;
         }},
        {"biorthogonality", "<E(gamma_lambda), E'(gamma_mu^-1)> = 0 and <E+(gamma_lambda), E+(gamma_mu)>_+ = 0 for lambda != mu",
         [](const SuiteConfig& c) { return detail::run_biorthogonality(c, false); }},
        {"norms", "diagonal pairings against w~(gamma_0^-1)/w~(gamma_lambda^-1) and the explicit symmetric norm product",
         [](const SuiteConfig& c) { return detail::run_biorthogonality(c, true); }},
        {"constant-term", "<1,1>_+/|W| = infinite product; <f,g> = (K/|W|)<f,g>_+; sum_w w C = K; Delta = C Delta_+",
         [](const SuiteConfig& c) { return constant_term_check(c.n, c.params, c.resolved_grid(), c.tol, c.seed); }},
        {"adjoint", "<T_i f, g> = <f, (T_i')^-1 g> for i = 0..n",
         [](const SuiteConfig& c) {
             Report r;
             const GridSpec g = c.resolved_grid();
             for (int i = 0; i <= c.n; ++i) r.merge(adjoint_check(c.n, i, c.params, g, std::min(c.trials, 5), c.seed, c.tol));
             return r;
         }},
        {"residues", "iterated residues w~, w~_+ against the closed-form ratios and w~ = C w~_+",
         [](const SuiteConfig& c) { return residue_check(weights_in_box(c.n, std::min(c.box, 2)), c.params, c.resolved_grid(), c.tol); }},
        {"transform", "G(F(E(gamma_lambda))) = k E(gamma_lambda) on the span of E(gamma_mu), mu+ <= e_1",
         [](const SuiteConfig& c) { return transform_roundtrip(weights_in_box(c.n, 1), c.params, c.resolved_grid(), c.tol); }},
    };
    return table;
}

inline bool is_quadrature_suite(const std::string& name) {
    return name == "biorthogonality" || name == "norms" || name == "constant-term" || name == "adjoint" ||
           name == "residues" || name == "transform" || name == "normrelations";
}

// Runs one suite, or all of them for "all"; unknown names throw std::out_of_range.
inline Report run_suite(const std::string& name, const SuiteConfig& c) {
    if (name == "all") {
        Report r;
        r.suite = "all";
        for (const auto& s : suite_table()) {
            Report part = run_suite(s.name, c);
            r.merge(part);
        }
        return r;
    }
    for (const auto& s : suite_table())
        if (s.name == name) {
            if (is_quadrature_suite(name)) c.params.validate_for_quadrature();
            Report r = s.run(c);
            r.suite = name;
            return r;
        }
    throw std::out_of_range("unknown suite '" + name + "'");
}

}  // namespace koorn
