#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "closedforms.hpp"
#include "hecke.hpp"
#include "linalg.hpp"

namespace koorn {

enum class PolyKind { NonSym, Sym, AntiSym, E, EPlus };

inline const char* kind_name(PolyKind k) {
    switch (k) {
        case PolyKind::NonSym: return "nonsym";
        case PolyKind::Sym: return "sym";
        case PolyKind::AntiSym: return "antisym";
        case PolyKind::E: return "E";
        case PolyKind::EPlus: return "Eplus";
    }
    return "?";
}

struct KoornPoly {
    Weight degree;
    PolyKind kind;
    LaurentPoly poly;
    ParamSet params;
};

inline std::string params_key(const ParamSet& p) {
    const auto& m = p.mult;
    return to_string(p.qh) + ";" + to_string(m.t0) + ";" + to_string(m.t0v) + ";" + to_string(m.t) + ";" +
           to_string(m.tn) + ";" + to_string(m.tnv);
}

namespace detail {

// Memoizes solver output per (kind, weight, parameters); the dual and inverse
// variants are separate entries because they come from separate solves.
class PolyCache {
public:
    static PolyCache& instance() {
        static PolyCache c;
        return c;
    }

    template <class Compute>
    LaurentPoly get(PolyKind kind, const Weight& lam, const ParamSet& p, Compute&& compute) {
        const std::string key = std::string(kind_name(kind)) + "|" + weight_to_string(lam) + "|" + params_key(p);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = store_.find(key);
            if (it != store_.end()) return it->second;
        }
        LaurentPoly f = compute();
        std::lock_guard<std::mutex> lock(mu_);
        store_.emplace(key, f);
        return f;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        store_.clear();
    }

private:
    std::mutex mu_;
    std::map<std::string, LaurentPoly> store_;
};

inline std::string point_to_string(const SpectrumPoint& y) {
    std::string s = "(";
    for (std::size_t i = 0; i < y.size(); ++i) s += (i ? ", " : "") + to_string(y[i]);
    return s + ")";
}

}  // namespace detail

inline void clear_poly_cache() { detail::PolyCache::instance().clear(); }

// Throws GenericityError when two weights of the basis share a spectral point.
inline void assert_distinct_spectrum(const std::vector<Weight>& basis, const ParamSet& p) {
    std::map<SpectrumPoint, Weight> seen;
    for (const auto& mu : basis) {
        SpectrumPoint g = gamma(mu, p);
        auto [it, inserted] = seen.emplace(g, mu);
        if (!inserted)
            throw GenericityError("spectrum collision: gamma" + weight_to_string(it->second) + " = gamma" +
                                  weight_to_string(mu) + " = " + detail::point_to_string(g));
    }
}

// Matrix of Y_i on the monomials x^mu, mu in the basis: column mu holds the coefficients of Y_i x^mu.
inline RationalMatrix y_matrix(int i, const std::vector<Weight>& basis, const ParamSet& p) {
    std::map<Weight, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        LaurentPoly image = apply_Yi(i, LaurentPoly::monomial(basis[col]), p);
        for (const auto& [e, c] : image.terms()) {
            auto it = index.find(e);
            if (it == index.end())
                throw std::logic_error("Y_" + std::to_string(i) + " x^" + weight_to_string(basis[col]) +
                                       " leaves the downset at " + weight_to_string(e));
            m(it->second, col) = c;
        }
    }
    return m;
}

namespace detail {

inline LaurentPoly solve_ns(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    const std::vector<Weight> basis = downset(lam);
    assert_distinct_spectrum(basis, p);
    const std::size_t d = basis.size();
    const std::size_t top = d - 1;
    if (basis[top] != lam) throw std::logic_error("downset does not end at its generator");

    std::vector<SpectrumPoint> spec(d);
    for (std::size_t k = 0; k < d; ++k) spec[k] = gamma(basis[k], p);

    std::vector<RationalMatrix> mats;
    for (int i = 1; i <= n; ++i) {
        RationalMatrix m = y_matrix(i, basis, p);
        for (std::size_t r = 0; r < d; ++r) {
            if (m(r, r) != spec[r][static_cast<std::size_t>(i - 1)])
                throw std::logic_error("diagonal of Y_" + std::to_string(i) + " differs from gamma at " +
                                       weight_to_string(basis[r]));
            for (std::size_t c = 0; c < r; ++c)
                if (m(r, c) != 0)
                    throw std::logic_error("Y_" + std::to_string(i) + " is not triangular on the downset of " +
                                           weight_to_string(lam));
        }
        mats.push_back(std::move(m));
    }

    // Back-substitution from the top: (gamma_mu,i - gamma_lam,i) c_mu = -sum_{nu > mu} M_i(mu, nu) c_nu.
    std::vector<Rational> c(d);
    c[top] = 1;
    for (std::size_t r = top; r-- > 0;) {
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (spec[r][static_cast<std::size_t>(i)] != spec[top][static_cast<std::size_t>(i)]) {
                pick = i;
                break;
            }
        if (pick < 0) throw GenericityError("spectrum collision at " + weight_to_string(basis[r]));
        Rational rhs = 0;
        for (std::size_t k = r + 1; k < d; ++k)
            if (c[k] != 0) rhs -= mats[static_cast<std::size_t>(pick)](r, k) * c[k];
        c[r] = rhs / (spec[r][static_cast<std::size_t>(pick)] - spec[top][static_cast<std::size_t>(pick)]);
    }

    // Every row of every operator must hold, not only the rows used above.
    for (int i = 0; i < n; ++i)
        for (std::size_t r = 0; r < d; ++r) {
            Rational s = -spec[top][static_cast<std::size_t>(i)] * c[r];
            for (std::size_t k = r; k < d; ++k) s += mats[static_cast<std::size_t>(i)](r, k) * c[k];
            if (s != 0) throw GenericityError("no joint eigenvector for " + weight_to_string(lam));
        }

    LaurentPoly f(n);
    for (std::size_t k = 0; k < d; ++k) f.add_term(basis[k], c[k]);
    return f;
}

inline RationalMatrix stacked_eigen_system(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    const std::vector<Weight> basis = downset(lam);
    const SpectrumPoint g = gamma(lam, p);
    RationalMatrix all;
    for (int i = 1; i <= n; ++i) {
        RationalMatrix m = y_matrix(i, basis, p);
        for (std::size_t r = 0; r < basis.size(); ++r) m(r, r) -= g[static_cast<std::size_t>(i - 1)];
        all.stack(m);
    }
    return all;
}

}  // namespace detail

// Dimension of the joint kernel of (Y_i - gamma_lambda^{e_i}) on the span of the downset.
inline std::size_t joint_kernel_dimension(const Weight& lam, const ParamSet& p) {
    RationalMatrix m = detail::stacked_eigen_system(lam, p);
    return m.cols() - rank(m);
}

// The monic joint eigenfunction of the Y_i supported on the downset of lambda.
inline KoornPoly compute_ns(const Weight& lam, const ParamSet& p) {
    LaurentPoly f = detail::PolyCache::instance().get(PolyKind::NonSym, lam, p, [&] { return detail::solve_ns(lam, p); });
    return {lam, PolyKind::NonSym, f, p};
}

// m_nu = sum of x^mu over the W-orbit of nu.
inline LaurentPoly monomial_symmetric(const Weight& nu) {
    LaurentPoly f(static_cast<int>(nu.size()));
    for (const auto& mu : weyl_orbit(nu)) f.add_term(mu, 1);
    return f;
}

namespace detail {

inline LaurentPoly solve_sym(const Weight& lam, const ParamSet& p) {
    const std::vector<Weight> basis = dominant_weights_below(lam);
    const std::size_t d = basis.size();
    const std::size_t top = d - 1;
    if (basis[top] != lam) throw std::logic_error("dominant weights below lambda do not end at lambda");
    std::map<Weight, std::size_t> index;
    for (std::size_t k = 0; k < d; ++k) index[basis[k]] = k;

    const Rational e0 = m_e1(gamma(zero_weight(static_cast<int>(lam.size())), p));
    RationalMatrix m(d, d);
    for (std::size_t col = 0; col < d; ++col) {
        LaurentPoly image = apply_L_sym(monomial_symmetric(basis[col]), p);
        for (const auto& [e, c] : image.terms()) {
            if (!is_dominant(e)) continue;
            auto it = index.find(e);
            if (it == index.end())
                throw std::logic_error("L m_" + weight_to_string(basis[col]) + " leaves the span at " + weight_to_string(e));
            m(it->second, col) = c;
        }
    }
    std::vector<Rational> eig(d);
    for (std::size_t k = 0; k < d; ++k) {
        eig[k] = m_e1(gamma(basis[k], p)) - e0;
        if (m(k, k) != eig[k]) throw std::logic_error("diagonal of L differs from its predicted eigenvalue");
        for (std::size_t c = 0; c < k; ++c)
            if (m(k, c) != 0) throw std::logic_error("L is not triangular on the monomial symmetric basis");
    }
    std::vector<Rational> c(d);
    c[top] = 1;
    for (std::size_t r = top; r-- > 0;) {
        if (eig[r] == eig[top])
            throw GenericityError("eigenvalue collision of L between " + weight_to_string(basis[r]) + " and " +
                                  weight_to_string(lam));
        Rational rhs = 0;
        for (std::size_t k = r + 1; k < d; ++k) rhs -= m(r, k) * c[k];
        c[r] = rhs / (eig[r] - eig[top]);
    }
    LaurentPoly f(static_cast<int>(lam.size()));
    for (std::size_t k = 0; k < d; ++k) f += monomial_symmetric(basis[k]) * c[k];
    return f;
}

}  // namespace detail

// The W-invariant eigenfunction of L whose expansion in the m_nu starts with m_lambda.
inline KoornPoly compute_sym(const Weight& lam, const ParamSet& p) {
    if (!is_dominant(lam)) throw std::invalid_argument("symmetric polynomial needs a dominant weight, got " + weight_to_string(lam));
    LaurentPoly f = detail::PolyCache::instance().get(PolyKind::Sym, lam, p, [&] { return detail::solve_sym(lam, p); });
    return {lam, PolyKind::Sym, f, p};
}

// The monic element of C_- A(lambda), obtained from C_- P_{-lambda}.
inline KoornPoly compute_antisym(const Weight& lam, const ParamSet& p) {
    if (!is_regular_dominant(lam))
        throw std::invalid_argument("anti-symmetric polynomial needs lambda - kappa dominant, got " + weight_to_string(lam));
    LaurentPoly f = detail::PolyCache::instance().get(PolyKind::AntiSym, lam, p, [&] {
        LaurentPoly g = apply_C(-1, compute_ns(-lam, p).poly, p);
        const Rational lead = g.coeff(lam);
        if (lead == 0) throw GenericityError("C_- P_" + weight_to_string(-lam) + " has no x^lambda term");
        return g * inverse(lead);
    });
    return {lam, PolyKind::AntiSym, f, p};
}

// E(gamma_lambda; .) = P_lambda / P_lambda(x_0^-1).
inline KoornPoly normalize_E(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    LaurentPoly f = compute_ns(lam, p).poly;
    const Rational v = f.eval(inverse_point(x0(p, n)));
    if (v == 0) throw GenericityError("P_" + weight_to_string(lam) + " vanishes at x_0^-1");
    return {lam, PolyKind::E, f * inverse(v), p};
}

// E+(gamma_lambda; .) = P+_lambda / P+_lambda(x_0).
inline KoornPoly normalize_Eplus(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    LaurentPoly f = compute_sym(lam, p).poly;
    const Rational v = f.eval(x0(p, n));
    if (v == 0) throw GenericityError("P+_" + weight_to_string(lam) + " vanishes at x_0");
    return {lam, PolyKind::EPlus, f * inverse(v), p};
}

// chi(x) = x^kappa prod over negative roots of (1 - x^alpha) v_alpha(x; t^-1; q^-1).
inline LaurentPoly weyl_character_factor(int n, const ParamSet& p) {
    const ParamSet inv = p.inverse();
    LaurentPoly chi = LaurentPoly::monomial(kappa(n));
    for (const auto& a : positive_roots(n)) chi = chi * tv_factor(finite_root(-a), inv.mult, inv.qh);
    return chi;
}

// ---------------------------------------------------------------------------
// Identity checks.

inline bool supported_on(const LaurentPoly& f, const std::vector<Weight>& basis) {
    std::set<Weight> allowed(basis.begin(), basis.end());
    for (const auto& [e, c] : f.terms())
        if (!allowed.count(e)) return false;
    return true;
}

// Monic, downset support, Y_i P = gamma^{e_i} P, f(Y) P = f(gamma) P, and a one-dimensional joint kernel.
inline Report check_eigen(const Weight& lam, const ParamSet& p, bool with_kernel = true) {
    const int n = static_cast<int>(lam.size());
    Report r;
    r.suite = "eigen";
    const LaurentPoly P = compute_ns(lam, p).poly;
    const SpectrumPoint g = gamma(lam, p);
    const std::string w = weight_to_string(lam);
    r.exact("monic " + w, "coefficient of x^lambda in P_lambda is 1", P.coeff(lam) == 1);
    r.exact("support " + w, "P_lambda is supported on the downset of lambda", supported_on(P, downset(lam)));
    bool ok = true;
    for (int i = 1; i <= n; ++i) ok = ok && apply_Yi(i, P, p) == P * g[static_cast<std::size_t>(i - 1)];
    r.exact("Y eigen " + w, "Y_i P_lambda = gamma_lambda^{e_i} P_lambda for all i", ok);

    std::vector<LaurentPoly> fs;
    fs.push_back(LaurentPoly::monomial(unit_weight(n, 0)));
    fs.push_back(LaurentPoly::monomial(unit_weight(n, n - 1)));
    Weight all_ones(static_cast<std::size_t>(n), 1);
    fs.push_back(LaurentPoly::monomial(all_ones));
    fs.push_back(LaurentPoly::monomial(unit_weight(n, 0)) + LaurentPoly::monomial(-unit_weight(n, 0)));
    bool fy = true;
    for (const auto& h : fs) fy = fy && apply_poly_Y(h, P, p) == P * h.eval(g);
    r.exact("f(Y) " + w, "f(Y) P_lambda = f(gamma_lambda) P_lambda", fy);
    if (with_kernel) {
        std::size_t dim = joint_kernel_dimension(lam, p);
        r.exact("kernel " + w, "joint eigenspace of the Y_i on the downset is one-dimensional", dim == 1,
                "dimension " + std::to_string(dim));
    }
    return r;
}

// T_i P_lambda = xi_i(gamma_lambda) P_lambda + eta_i(gamma_lambda) P_{s_i lambda}.
inline Report check_Ti_action(const Weight& lam, int i, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    Report r;
    r.suite = "structure";
    const LaurentPoly P = compute_ns(lam, p).poly;
    const Weight sl = SignedPermutation::simple(i, n).apply(lam);
    const XiEta xe = xi_eta(i, lam, p);
    LaurentPoly rhs = P * xe.xi;
    if (sl == lam)
        rhs += P * xe.eta;
    else
        rhs += compute_ns(sl, p).poly * xe.eta;
    const std::string tag = weight_to_string(lam) + " i=" + std::to_string(i);
    r.exact("T_i expansion " + tag, "T_i P_lambda = xi_i(gamma_lambda) P_lambda + eta_i(gamma_lambda) P_{s_i lambda}",
            apply_Ti(i, P, p) == rhs);
    r.exact("xi closed form " + tag, "xi_i = t~_i - t~_i^-1 v~_{-a_i} equals its single-fraction form",
            xe.xi == xi_fraction(i, gamma(lam, p), p));
    if (sl == lam)
        r.exact("stabilized " + tag, "xi_i + eta_i = t_i when s_i lambda = lambda", xe.xi + xe.eta == p.ti(i, n));
    return r;
}

// S_i P_lambda = (gamma_lambda^{a_i} - gamma_{s_i lambda}^{a_i}) eta_i(gamma_lambda) P_{s_i lambda}.
inline Report check_intertwiner(const Weight& lam, int i, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    Report r;
    r.suite = "structure";
    const Weight sl = SignedPermutation::simple(i, n).apply(lam);
    const Weight ai = simple_root(i, n).grad;
    const Rational coef = (point_power(gamma(lam, p), ai) - point_power(gamma(sl, p), ai)) * xi_eta(i, lam, p).eta;
    const LaurentPoly lhs = apply_Si(i, compute_ns(lam, p).poly, p);
    r.exact("intertwiner " + weight_to_string(lam) + " i=" + std::to_string(i),
            "S_i P_lambda = (gamma_lambda^{a_i} - gamma_{s_i lambda}^{a_i}) eta_i P_{s_i lambda}",
            lhs == compute_ns(sl, p).poly * coef);
    return r;
}

// Idempotence, orthogonality and the defining eigen-equations of C_+ and C_-.
inline Report check_idempotents(const LaurentPoly& f, const ParamSet& p) {
    const int n = f.n();
    Report r;
    r.suite = "structure";
    const LaurentPoly cp = apply_C(1, f, p), cm = apply_C(-1, f, p);
    r.exact("C+ idempotent", "C_+ C_+ = C_+", apply_C(1, cp, p) == cp);
    r.exact("C- idempotent", "C_- C_- = C_-", apply_C(-1, cm, p) == cm);
    r.exact("C+- orthogonal", "C_+ C_- = C_- C_+ = 0", apply_C(1, cm, p).is_zero() && apply_C(-1, cp, p).is_zero());
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
        const Rational t = p.ti(i, n);
        ok = ok && apply_Ti(i, cp, p) == cp * t && apply_Ti(i, cm, p) == cm * (-inverse(t));
    }
    r.exact("C+- characters", "(T_i - t_i) C_+ f = 0 and (T_i + t_i^-1) C_- f = 0", ok);
    r.exact("C+ symmetric", "C_+ f is W-invariant", is_w_invariant(cp));
    return r;
}

// P^+- as combinations of the P_mu over the orbit, with both product forms of the coefficients.
inline Report check_clm(const Weight& lam, const ParamSet& p) {
    Report r;
    r.suite = "structure";
    const std::string w = weight_to_string(lam);
    LaurentPoly sum_plus(static_cast<int>(lam.size()));
    bool forms_agree = true;
    for (const auto& mu : weyl_orbit(lam)) {
        const Rational c0 = clm_coefficient(1, lam, mu, p, 0);
        forms_agree = forms_agree && c0 == clm_coefficient(1, lam, mu, p, 1);
        sum_plus += compute_ns(mu, p).poly * c0;
    }
    const LaurentPoly Pplus = compute_sym(lam, p).poly;
    r.exact("P+ expansion " + w, "P+_lambda = sum over mu in W lambda of c+_{lambda,mu} P_mu", sum_plus == Pplus);
    r.exact("P+ proportional to C+ P_lambda " + w, "C_+ P_lambda spans A_+(lambda)", [&] {
        LaurentPoly g = apply_C(1, compute_ns(lam, p).poly, p);
        Rational lead = g.coeff(lam);
        return lead != 0 && g * inverse(lead) == Pplus;
    }());
    if (is_regular_dominant(lam)) {
        LaurentPoly sum_minus(static_cast<int>(lam.size()));
        for (const auto& mu : weyl_orbit(lam)) {
            const Rational c0 = clm_coefficient(-1, lam, mu, p, 0);
            forms_agree = forms_agree && c0 == clm_coefficient(-1, lam, mu, p, 1);
            sum_minus += compute_ns(mu, p).poly * c0;
        }
        r.exact("P- expansion " + w, "P-_lambda = sum over mu in W lambda of c-_{lambda,mu} P_mu",
                sum_minus == compute_antisym(lam, p).poly);
    }
    r.exact("coefficient forms " + w, "products over v~(gamma_mu) and over v~(gamma_lambda^-1) agree", forms_agree);
    return r;
}

// m_{e_1}(Y) acts on every P_mu, mu in W lambda, by m_{e_1}(gamma_lambda).
inline Report check_central_character(const Weight& lam, const ParamSet& p) {
    Report r;
    r.suite = "structure";
    const Rational e = m_e1(gamma(lam, p));
    bool ok = true;
    for (const auto& mu : weyl_orbit(lam)) {
        const LaurentPoly P = compute_ns(mu, p).poly;
        ok = ok && apply_D(P, p) == P * e;
    }
    r.exact("central character " + weight_to_string(lam), "m_{e_1}(Y) acts on A(lambda) by m_{e_1}(gamma_lambda)", ok);
    return r;
}

// E(gamma_lambda; x_mu^-1) = E~(x_mu; gamma_lambda^-1), the right side solved at the dual parameters.
inline Report check_duality(const Weight& lam, const Weight& mu, const ParamSet& p) {
    Report r;
    r.suite = "duality";
    const ParamSet d = p.dual();
    const Rational lhs = normalize_E(lam, p).poly.eval(inverse_point(x_point(mu, p)));
    const Rational rhs = normalize_E(mu, d).poly.eval(inverse_point(gamma(lam, p)));
    r.exact("duality " + weight_to_string(lam) + "," + weight_to_string(mu),
            "E(gamma_lambda; x_mu^-1) = E~(x_mu; gamma_lambda^-1)", lhs == rhs, to_string(lhs));
    if (is_dominant(lam) && is_dominant(mu)) {
        const Rational ls = normalize_Eplus(lam, p).poly.eval(x_point(mu, p));
        const Rational rs = normalize_Eplus(mu, d).poly.eval(gamma(lam, p));
        r.exact("symmetric duality " + weight_to_string(lam) + "," + weight_to_string(mu),
                "E+(gamma_lambda; x_mu) = E~+(x_mu; gamma_lambda)", ls == rs, to_string(ls));
    }
    return r;
}

// T_i E(gamma) = t~_i E(gamma) + t~_i^-1 v~_{a_i}(gamma^-1)(E(s_i gamma) - E(gamma)); i = 0 uses U_n and the dot action.
inline Report check_spectral_action(const Weight& lam, int i, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    Report r;
    r.suite = "transfer";
    const ParamSet d = p.dual();
    const LaurentPoly E = normalize_E(lam, p).poly;
    const Weight moved = dot_simple(i, lam);
    const LaurentPoly Es = moved == lam ? E : normalize_E(moved, p).poly;
    const AffineRoot ai = simple_root(i, n);
    const Rational tt = d.mult.at(ai);
    const Rational v = v_eval(ai, inverse_point(gamma(lam, p)), d);
    const LaurentPoly lhs = i == 0 ? apply_Un(E, p) : apply_Ti(i, E, p);
    const LaurentPoly rhs = E * tt + (Es - E) * (inverse(tt) * v);
    r.exact("spectral action " + weight_to_string(lam) + " i=" + std::to_string(i),
            i == 0 ? "U_n E(gamma) = t~_0 E + t~_0^-1 v~_{a_0}(gamma^-1)(E(s_0 gamma) - E(gamma))"
                   : "T_i E(gamma) = t~_i E + t~_i^-1 v~_{a_i}(gamma^-1)(E(s_i gamma) - E(gamma))",
            lhs == rhs);
    return r;
}

// P-_{lambda + kappa}(x; t) = chi(x; t) P+_lambda(x; q t).
inline Report check_gwcf(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    Report r;
    r.suite = "gwcf";
    const LaurentPoly chi = weyl_character_factor(n, p);
    const LaurentPoly lhs = compute_antisym(lam + kappa(n), p).poly;
    const LaurentPoly rhs = chi * compute_sym(lam, p.qshift()).poly;
    r.exact("Weyl character " + weight_to_string(lam), "P-_{lambda+kappa}(t) = chi(t) P+_lambda(q t)", lhs == rhs);
    if (lam == zero_weight(n))
        r.exact("chi monic", "chi has leading term x^kappa with coefficient 1", chi.coeff(kappa(n)) == 1);
    return r;
}

// P-_lambda is annihilated by T_i + t_i^-1.
inline Report check_antisym_character(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    Report r;
    r.suite = "structure";
    const LaurentPoly P = compute_antisym(lam, p).poly;
    bool ok = true;
    for (int i = 1; i <= n; ++i) ok = ok && apply_Ti(i, P, p) == P * (-inverse(p.ti(i, n)));
    r.exact("antisymmetric character " + weight_to_string(lam), "T_i P-_lambda = -t_i^-1 P-_lambda", ok);
    r.exact("antisymmetric monic " + weight_to_string(lam), "P-_lambda = x^lambda + lower terms", P.coeff(lam) == 1);
    return r;
}

// Predicted and solved values of P_lambda(x_0^-1) and P+_lambda(x_0).
inline Report check_evaluation(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    Report r;
    r.suite = "evaluation";
    const Rational solved = compute_ns(lam, p).poly.eval(inverse_point(x0(p, n)));
    const Rational formula = eval_formula_ns(lam, p);
    r.exact("evaluation " + weight_to_string(lam), "P_lambda(x_0^-1) = product formula", solved == formula,
            to_string(formula));
    if (is_dominant(lam)) {
        const SymEvaluation e = eval_sym_routes(lam, p);
        const LaurentPoly Pp = compute_sym(lam, p).poly;
        const Rational s = Pp.eval(x0(p, n));
        r.exact("symmetric routes " + weight_to_string(lam), "root-product and q-Pochhammer forms of P+_lambda(x_0) agree",
                e.routes_agree());
        r.exact("symmetric evaluation " + weight_to_string(lam), "P+_lambda(x_0) = P+_lambda(x_0^-1) = product formula",
                s == e.root_form && Pp.eval(inverse_point(x0(p, n))) == s, to_string(e.root_form));
    }
    return r;
}

}  // namespace koorn
