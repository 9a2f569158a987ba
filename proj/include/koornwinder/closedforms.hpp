#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "spectrum.hpp"

namespace koorn {

// ---------------------------------------------------------------------------
// q-shifted factorials.

inline Rational qpoch(const Rational& y, const Rational& q, long k) {
    if (k < 0) throw std::invalid_argument("q-shifted factorial needs k >= 0");
    Rational r = 1, term = y;
    for (long j = 0; j < k; ++j) {
        r *= 1 - term;
        term *= q;
    }
    return r;
}

inline Rational qpoch(std::initializer_list<Rational> ys, const Rational& q, long k) {
    Rational r = 1;
    for (const auto& y : ys) r *= qpoch(y, q, k);
    return r;
}

// (y;q)_infinity truncated after M factors.
template <class Scalar>
Scalar qpoch_inf(const Scalar& y, double q, int M) {
    Scalar r = 1, term = y;
    for (int j = 0; j < M; ++j) {
        r *= Scalar(1) - term;
        term *= q;
    }
    return r;
}

// ---------------------------------------------------------------------------
// v_beta at a point, C and K.

// v_beta(y) = (1 - t_b t_{b/2} y^{b/2})(1 + t_b t_{b/2}^-1 y^{b/2}) / (1 - y^b).
inline Rational v_eval(const AffineRoot& beta, const SpectrumPoint& y, const ParamSet& p) {
    const Rational yb = point_power(y, beta, p.qh);
    if (yb == 1) throw GenericityError("pole of v_" + root_to_string(beta) + ": the point satisfies y^beta = 1");
    const Rational tb = p.mult.at(beta);
    Rational num;
    if (grad_kind(beta.grad) == GradKind::Long) {
        const Rational th = p.mult.half_at(beta);
        const Rational yh = point_power(y, AffineRoot{[&] {
                                                          Weight g = beta.grad;
                                                          for (auto& v : g) v /= 2;
                                                          return g;
                                                      }(),
                                                      beta.half_delta / 2},
                                        p.qh);
        num = (1 - tb * th * yh) * (1 + tb / th * yh);
    } else {
        num = 1 - tb * tb * yb;
    }
    return num / (1 - yb);
}

inline Rational v_eval(const Weight& alpha, const SpectrumPoint& y, const ParamSet& p) {
    return v_eval(finite_root(alpha), y, p);
}

// C(y) = prod over negative finite roots alpha of v_alpha(y).
inline Rational C_eval(const SpectrumPoint& y, const ParamSet& p) {
    Rational r = 1;
    for (const auto& a : positive_roots(static_cast<int>(y.size()))) r *= v_eval(-a, y, p);
    return r;
}

// K = C(x_0^-1).  At the dual parameters this gives K~ = C(gamma_0^-1; t~).
inline Rational K_const(const ParamSet& p, int n) { return C_eval(inverse_point(x0(p, n)), p); }

// ---------------------------------------------------------------------------
// Coefficients of T_i on P_lambda.

struct XiEta {
    Rational xi, eta;
};

inline XiEta xi_eta(int i, const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    if (i < 1 || i > n) throw std::out_of_range("xi/eta index must be in 1..n");
    const ParamSet d = p.dual();
    const SpectrumPoint g = gamma(lam, p);
    const AffineRoot ai = simple_root(i, n);
    const AffineRoot minus_ai{-ai.grad, -ai.half_delta};
    const Rational ti = d.mult.at(ai);
    XiEta r;
    r.xi = ti - inverse(ti) * v_eval(minus_ai, g, d);
    if (dot(lam, ai.grad) < 0)
        r.eta = ti;
    else
        r.eta = pow(ti, -3) * v_eval(ai, g, d) * v_eval(minus_ai, g, d);
    return r;
}

// The closed form of xi_i as a single fraction, used to cross-check v-based evaluation.
inline Rational xi_fraction(int i, const SpectrumPoint& g, const ParamSet& p) {
    const int n = static_cast<int>(g.size());
    const ParamSet d = p.dual();
    const AffineRoot ai = simple_root(i, n);
    const Rational x_a = point_power(g, ai, p.qh);
    const Rational t = d.mult.at(ai);
    const Rational th = d.mult.half_at(ai);
    Rational num = (inverse(t) - t) * x_a;
    if (grad_kind(ai.grad) == GradKind::Long) {
        Weight h = ai.grad;
        for (auto& v : h) v /= 2;
        num += (inverse(th) - th) * point_power(g, h);
    }
    return num / (1 - x_a);
}

// ---------------------------------------------------------------------------
// Expansion coefficients of P^+- over the P_mu, mu in the orbit of lambda.

// Route 0 takes the product over alpha > 0 with <mu, alpha> < 0 at gamma_mu;
// route 1 takes it over Sigma^+ cap w_mu^-1 Sigma^- at gamma_lambda^-1.
inline Rational clm_coefficient(int sign, const Weight& lam, const Weight& mu, const ParamSet& p, int route) {
    const ParamSet d = p.dual();
    const SignedPermutation wmu = w_lambda(mu);
    const int len = length(wmu);
    Rational c = pow(t_w(wmu, d.mult), -2);
    if (sign < 0 && len % 2 == 1) c = -c;
    if (route == 0) {
        const SpectrumPoint g = gamma(mu, p);
        for (const auto& a : positive_roots(static_cast<int>(mu.size())))
            if (dot(mu, a) < 0) c *= v_eval(sign > 0 ? a : -a, g, d);
    } else {
        const SpectrumPoint g = inverse_point(gamma(lam, p));
        for (const auto& b : inversion_set_finite(wmu)) c *= v_eval(sign > 0 ? b.grad : -b.grad, g, d);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Norm ratios.

// <E+, E+>_+ / <1,1>_+ as the explicit product over i and over pairs i < j.
inline Rational norm_ratio_sym(const Weight& lam, const ParamSet& p) {
    if (!is_dominant(lam)) throw std::invalid_argument("norm ratio needs a dominant weight");
    const int n = static_cast<int>(lam.size());
    const Rational q = p.q(), a = p.a(), b = p.b(), c = p.c(), d = p.d(), t = p.mult.t;
    const Rational abcd = a * b * c * d;
    Rational r = 1;
    for (int i = 1; i <= n; ++i) {
        const long l = lam[static_cast<std::size_t>(i - 1)];
        const Rational t2 = pow(t, 2 * (n - i)), t4 = pow(t, 4 * (n - i));
        Rational num = qpoch(abcd * t4 / q, q, 2 * l) * pow(c * c * t4, l) *
                       qpoch({q * t2, a * b * t2, a * d * t2, b * d * t2}, q, l);
        Rational den = qpoch(abcd * t4, q, 2 * l) * qpoch({a * c * t2, b * c * t2, c * d * t2, abcd * t2 / q}, q, l);
        if (den == 0) throw GenericityError("norm product has a vanishing denominator at index " + std::to_string(i));
        r *= num / den;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long s = lam[static_cast<std::size_t>(i - 1)] + lam[static_cast<std::size_t>(j - 1)];
            const long df = lam[static_cast<std::size_t>(i - 1)] - lam[static_cast<std::size_t>(j - 1)];
            Rational num = qpoch({abcd * pow(t, 2 * (2 * n - i - j - 1)), abcd * pow(t, 2 * (2 * n - i - j)) / q}, q, s) *
                           qpoch({q * pow(t, 2 * (j - i - 1)), pow(t, 2 * (j - i))}, q, df);
            Rational den = qpoch({abcd * pow(t, 2 * (2 * n - i - j)), abcd * pow(t, 2 * (2 * n - i - j + 1)) / q}, q, s) *
                           qpoch({q * pow(t, 2 * (j - i)), pow(t, 2 * (j - i + 1))}, q, df);
            if (den == 0)
                throw GenericityError("norm product has a vanishing denominator at pair " + std::to_string(i) + "," +
                                      std::to_string(j));
            r *= num / den;
        }
    return r;
}

// w~(gamma_0^-1) / w~(gamma_lambda^-1), using w~(gamma_lambda^-1) = C(gamma_lambda^-1; t~) w~_+(gamma_{lambda^+}^-1).
inline Rational norm_ratio_ns(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    const ParamSet d = p.dual();
    return K_const(d, n) / C_eval(inverse_point(gamma(lam, p)), d) * norm_ratio_sym(dominant(lam), p);
}

// ---------------------------------------------------------------------------
// Evaluation formulas.

// Predicted P_lambda(x_0^-1).
inline Rational eval_formula_ns(const Weight& lam, const ParamSet& p) {
    const ParamSet d = p.dual();
    const Weight plus = dominant(lam);
    const SignedPermutation wl = w_lambda(lam);
    Rational r = inverse(norm_ratio_ns(lam, p));
    r *= pow(t_w(wl, d.mult), 2);
    r /= t_w(AffineWeylElement::translation(-plus), d.mult);
    const auto skip = inversion_set_finite(wl);
    const SpectrumPoint g = inverse_point(gamma(plus, p));
    for (const auto& beta : inversion_set_translation(plus)) {
        if (std::find(skip.begin(), skip.end(), beta) != skip.end()) continue;
        r *= v_eval(beta, g, d);
    }
    return r;
}

// P^+_lambda(x_0) through the roots of R^+ cap tau(lambda) R^-.
inline Rational eval_sym_root_form(const Weight& lam, const ParamSet& p) {
    const ParamSet d = p.dual();
    Rational r = inverse(norm_ratio_sym(lam, p));
    r /= t_w(AffineWeylElement::translation(-lam), d.mult);
    const SpectrumPoint g = inverse_point(gamma(lam, p));
    for (const auto& beta : inversion_set_translation(lam)) r *= v_eval(beta, g, d);
    return r;
}

// P^+_lambda(x_0) as a product of q-shifted factorials in a, b, c, d, t.
inline Rational eval_sym_pochhammer_form(const Weight& lam, const ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    const Rational q = p.q(), a = p.a(), b = p.b(), c = p.c(), d = p.d(), t = p.mult.t;
    const Rational abcd = a * b * c * d;
    Rational r = 1;
    for (int i = 1; i <= n; ++i) {
        const long l = lam[static_cast<std::size_t>(i - 1)];
        const Rational t2 = pow(t, 2 * (n - i)), t4 = pow(t, 4 * (n - i));
        Rational num = qpoch({a * c * t2, b * c * t2, c * d * t2, abcd * t2 / q}, q, l);
        Rational den = qpoch(abcd * t4 / q, q, 2 * l) * pow(c * t2, l);
        if (den == 0) throw GenericityError("evaluation product has a vanishing denominator");
        r *= num / den;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long s = lam[static_cast<std::size_t>(i - 1)] + lam[static_cast<std::size_t>(j - 1)];
            const long df = lam[static_cast<std::size_t>(i - 1)] - lam[static_cast<std::size_t>(j - 1)];
            Rational num = qpoch(abcd * pow(t, 2 * (2 * n - i - j + 1)) / q, q, s) * qpoch(pow(t, 2 * (j - i + 1)), q, df);
            Rational den = qpoch(abcd * pow(t, 2 * (2 * n - i - j)) / q, q, s) * qpoch(pow(t, 2 * (j - i)), q, df);
            if (den == 0) throw GenericityError("evaluation product has a vanishing denominator");
            r *= num / den;
        }
    return r;
}

struct SymEvaluation {
    Rational root_form, pochhammer_form;
    bool routes_agree() const { return root_form == pochhammer_form; }
};

inline SymEvaluation eval_sym_routes(const Weight& lam, const ParamSet& p) {
    if (!is_dominant(lam)) throw std::invalid_argument("symmetric evaluation needs a dominant weight");
    return {eval_sym_root_form(lam, p), eval_sym_pochhammer_form(lam, p)};
}

// Predicted P^+_lambda(x_0); both routes must agree.
inline Rational eval_formula_sym(const Weight& lam, const ParamSet& p) {
    SymEvaluation e = eval_sym_routes(lam, p);
    if (!e.routes_agree())
        throw std::logic_error("the two evaluation routes disagree at " + weight_to_string(lam) + ": " +
                               to_string(e.root_form) + " vs " + to_string(e.pochhammer_form));
    return e.root_form;
}

// ---------------------------------------------------------------------------
// Constant term and norm relations.

// |W|^-1 <1,1>_+ as a product of infinite q-shifted factorials, each truncated after M factors.
inline double gustafson_ct(const ParamSet& p, int n, int M) {
    const double q = to_double(p.q()), t = to_double(p.mult.t);
    const double a = to_double(p.a()), b = to_double(p.b()), c = to_double(p.c()), d = to_double(p.d());
    for (double v : {q, t, a, b, c, d})
        if (!(std::abs(v) < 1)) throw std::invalid_argument("constant term needs |q|,|t|,|a|,|b|,|c|,|d| < 1");
    auto P = [&](double y) { return qpoch_inf(y, q, M); };
    double r = 1;
    for (int j = 1; j <= n; ++j) {
        const double tj = std::pow(t, 2 * (n - j));
        r *= P(t * t) * P(std::pow(t, 2 * (2 * n - j - 1)) * a * b * c * d);
        r /= P(q) * P(std::pow(t, 2 * (n - j + 1))) * P(tj * a * b) * P(tj * a * c) * P(tj * a * d) * P(tj * b * c) *
             P(tj * b * d) * P(tj * c * d);
    }
    return r;
}

inline Weight kappa(int n) {
    Weight k(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = n - i;
    return k;
}

inline bool is_regular_dominant(const Weight& lam) {
    const int n = static_cast<int>(lam.size());
    return is_dominant(lam) && is_dominant(lam - kappa(n));
}

// prod over positive finite roots of v_alpha(gamma^-1; t~) / v_alpha(gamma; t~).
inline Rational norm_relation_product(const Weight& lam, const ParamSet& p) {
    const ParamSet d = p.dual();
    const SpectrumPoint g = gamma(lam, p), gi = inverse_point(g);
    Rational r = 1;
    for (const auto& a : positive_roots(static_cast<int>(lam.size()))) r *= v_eval(a, gi, d) / v_eval(a, g, d);
    return r;
}

// t_sigma^2 <P+_lambda, P+_lambda>_{+,t} / <P+_{lambda-kappa}, P+_{lambda-kappa}>_{+,qt}, assembled from
// the evaluation formula, the norm product and the constant term.
inline double norm_relation_lhs(const Weight& lam, const ParamSet& p, int M) {
    const int n = static_cast<int>(lam.size());
    const ParamSet ps = p.qshift();
    const Weight low = lam - kappa(n);
    const Rational tsig = t_w(SignedPermutation::longest(n), p.mult);
    const Rational exact_part = tsig * tsig * pow(eval_formula_sym(lam, p), 2) * norm_ratio_sym(lam, p) /
                                (pow(eval_formula_sym(low, ps), 2) * norm_ratio_sym(low, ps));
    return to_double(exact_part) * gustafson_ct(p, n, M) / gustafson_ct(ps, n, M);
}

inline Report norm_relation_check(const Weight& lam, const ParamSet& p, int M, double tol_rel) {
    if (!is_regular_dominant(lam))
        throw std::invalid_argument("norm relations need a regular dominant weight, got " + weight_to_string(lam));
    Report r;
    r.suite = "normrelations";
    const Rational rhs = norm_relation_product(lam, p);
    const double lhs = norm_relation_lhs(lam, p, M);
    const double rv = to_double(rhs);
    r.numeric("norm relation " + weight_to_string(lam),
              "t_sigma^2 <P+,P+>_+(t) / <P+_{lambda-kappa},P+_{lambda-kappa}>_+(qt) = prod v_a(gamma^-1)/v_a(gamma)",
              std::abs(lhs - rv) / std::abs(rv), tol_rel, "rhs=" + to_string(rhs));
    return r;
}

}  // namespace koorn
