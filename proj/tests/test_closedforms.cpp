#include <gtest/gtest.h>

#include <koornwinder/suites.hpp>

using namespace koorn;

TEST(ClosedForms, QPochhammer) {
    const Rational q = frac(1, 3), y = frac(2, 5);
    EXPECT_EQ(qpoch(y, q, 0), Rational(1));
    EXPECT_EQ(qpoch(y, q, 2), (1 - y) * (1 - y * q));
    EXPECT_THROW(qpoch(y, q, -1), std::invalid_argument);
    EXPECT_EQ(qpoch({y, q}, q, 1), (1 - y) * (1 - q));
    double direct = 1;
    for (int k = 0; k < 200; ++k) direct *= 1 - 0.4 * std::pow(1.0 / 3, k);
    EXPECT_NEAR(qpoch_inf<double>(0.4, 1.0 / 3, 200), direct, 1e-15);
}

TEST(ClosedForms, EvaluationFormulasMatchSolver) {
    for (const auto& p : {default_params(), quadrature_params()})
        for (const auto& lam : weights_in_box(2, 3)) {
            const Report r = check_evaluation(lam, p);
            for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name;
        }
}

TEST(ClosedForms, SymmetricRoutesAgree) {
    for (const auto& lam : dominant_in_box(3, 3)) EXPECT_TRUE(eval_sym_routes(lam, default_params()).routes_agree());
}

TEST(ClosedForms, RankOneEvaluationIsAskeyWilsonValue) {
    // p_m(a + 1/a) for monic Askey-Wilson polynomials is a^-m (ab, ac, ad; q)_m.
    const ParamSet p = quadrature_params();
    for (int m = 0; m <= 4; ++m) {
        const auto P = compute_sym({m}, p).poly;
        const Rational want = pow(p.a(), -m) * qpoch({p.a() * p.b(), p.a() * p.c(), p.a() * p.d()}, p.q(), m) /
                              qpoch(p.a() * p.b() * p.c() * p.d() * pow(p.q(), m - 1), p.q(), m);
        EXPECT_EQ(P.eval({p.a()}), want) << m;
    }
}

TEST(ClosedForms, GenericityErrorAtPole) {
    const ParamSet p = default_params();
    const AffineRoot a = simple_root(1, 2);
    // v_a(x) has its pole where x^a = 1.
    EXPECT_THROW(v_eval(a, SpectrumPoint{Rational(2), Rational(2)}, p), GenericityError);
}

TEST(ClosedForms, IntertwinerCoefficientsAndCharacters) {
    const ParamSet p = default_params();
    for (const auto& lam : weights_in_box(2, 2))
        for (int i = 1; i <= 2; ++i) {
            EXPECT_TRUE(check_Ti_action(lam, i, p).all_pass());
            EXPECT_TRUE(check_intertwiner(lam, i, p).all_pass());
        }
}

TEST(ClosedForms, ConstantKEqualsOrbitSum) {
    // K = C(x_0^-1) is also the sum over W of the Weyl translates of C at x_0^-1.
    const ParamSet p = default_params();
    const int n = 2;
    const SpectrumPoint y = inverse_point(x0(p, n));
    Rational sum = 0;
    for (const auto& w : weyl_group(n)) {
        SpectrumPoint wy(y.size());
        const auto winv = w.inverse();
        for (std::size_t i = 0; i < y.size(); ++i) {
            Weight e = zero_weight(n);
            e[i] = 1;
            wy[i] = point_power(y, winv.apply(e));
        }
        sum += C_eval(wy, p);
    }
    EXPECT_EQ(sum, K_const(p, n));
}

TEST(ClosedForms, NormRelations) {
    const ParamSet p = quadrature_params();
    for (const auto& nu : dominant_in_box(2, 1)) {
        const Report r = norm_relation_check(kappa(2) + nu, p, 40, 1e-6);
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " err " << c.error;
    }
}
