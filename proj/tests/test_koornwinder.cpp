#include <gtest/gtest.h>

#include "oracles.hpp"

#include <koornwinder/suites.hpp>

using namespace koorn;

TEST(Polynomials, ConstantForZeroWeight) {
    EXPECT_EQ(compute_ns({0, 0}, default_params()).poly.to_text(), "1");
    EXPECT_EQ(compute_sym({0, 0, 0}, default_params()).poly, LaurentPoly(3, Rational(1)));
}

TEST(Polynomials, RankOneSymmetricAreAskeyWilson) {
    for (const auto& p : {default_params(), quadrature_params()}) {
        const auto aw = oracle::askey_wilson_monic(5, p.a(), p.b(), p.c(), p.d(), p.q());
        for (int m = 0; m <= 5; ++m) EXPECT_EQ(compute_sym({m}, p).poly, aw[static_cast<std::size_t>(m)]) << "degree " << m;
    }
}

TEST(Polynomials, RankOneNonSymmetricSpanTheSymmetricOnes) {
    // P+_m lies in the span of P_m and P_-m.
    const ParamSet p = default_params();
    for (int m = 1; m <= 3; ++m) {
        const auto a = compute_ns({m}, p).poly, b = compute_ns({-m}, p).poly;
        const auto s = compute_sym({m}, p).poly;
        const Rational cb = s.coeff({-m}) - a.coeff({-m});
        EXPECT_EQ(s, a + b * cb) << m;
    }
}

TEST(Polynomials, SolverMatchesCombinedKernelOracle) {
    const ParamSet p = default_params();
    for (const auto& lam : weights_in_box(2, 2)) {
        const auto ker = oracle::combined_eigen_kernel(lam, p);
        ASSERT_EQ(ker.size(), 1u) << weight_to_string(lam);
        const auto P = compute_ns(lam, p).poly;
        EXPECT_EQ(ker[0] * inverse(ker[0].coeff(lam)), P) << weight_to_string(lam);
        EXPECT_EQ(joint_kernel_dimension(lam, p), 1u);
    }
}

TEST(Polynomials, EigenChecksOnBox) {
    for (const auto& lam : weights_in_box(2, 3)) {
        const Report r = check_eigen(lam, default_params());
        EXPECT_TRUE(r.all_pass()) << weight_to_string(lam);
    }
}

TEST(Polynomials, KnownLowDegreeExpansion) {
    // Regression value of P_(1,0) at the default parameters.
    const auto P = compute_ns({1, 0}, default_params()).poly;
    EXPECT_EQ(P.coeff({1, 0}), Rational(1));
    EXPECT_EQ(P.coeff({0, 1}), frac(1, 5));
    EXPECT_EQ(P.coeff({0, -1}), frac(1, 5));
    EXPECT_EQ(P.coeff({0, 0}), frac(2240007, 6267500));
    EXPECT_EQ(P.coeff({-1, 0}), frac(277043, 1566875));
    EXPECT_EQ(P.size(), 5u);
}

TEST(Polynomials, SymmetricAndAntisymmetricCharacters) {
    const ParamSet p = default_params();
    for (const auto& lam : std::vector<Weight>{{1, 0}, {1, 1}, {2, 0}}) {
        const auto s = compute_sym(lam, p).poly;
        EXPECT_TRUE(is_w_invariant(s));
        EXPECT_EQ(s.coeff(lam), Rational(1));
    }
    for (const auto& lam : std::vector<Weight>{{2, 1}, {3, 1}}) EXPECT_TRUE(check_antisym_character(lam, p).all_pass());
    EXPECT_THROW(compute_sym({0, 1}, p), std::invalid_argument);
    EXPECT_THROW(compute_antisym({1, 1}, p), std::invalid_argument);
}

TEST(Polynomials, StructureDualityAndEvaluationSuites) {
    SuiteConfig c;
    c.box = 2;
    for (const char* s : {"structure", "duality", "evaluation", "gwcf"}) {
        const Report r = run_suite(s, c);
        for (const auto& chk : r.checks) EXPECT_TRUE(chk.pass) << s << ": " << chk.name << " " << chk.detail;
    }
}

TEST(Polynomials, DegenerateParametersRaiseGenericityError) {
    const ParamSet bad = make_params("1/2", "2", "2/3", "1", "1", "4/5");
    try {
        compute_ns({1, 0}, bad);
        FAIL() << "expected a genericity error";
    } catch (const GenericityError& e) {
        EXPECT_NE(std::string(e.what()).find("gamma("), std::string::npos);
    }
}

TEST(Polynomials, CacheReturnsIdenticalResults) {
    const ParamSet p = default_params();
    const auto a = compute_ns({1, -1}, p).poly;
    clear_poly_cache();
    EXPECT_EQ(compute_ns({1, -1}, p).poly, a);
}

TEST(Polynomials, RankThreeSmoke) {
    const ParamSet p = default_params();
    for (const auto& lam : std::vector<Weight>{{0, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 0, 1}}) {
        EXPECT_TRUE(check_eigen(lam, p).all_pass()) << weight_to_string(lam);
        EXPECT_EQ(oracle::combined_eigen_kernel(lam, p).size(), 1u);
    }
}
