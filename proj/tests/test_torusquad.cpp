#include <gtest/gtest.h>

#include <koornwinder/suites.hpp>

using namespace koorn;

namespace {

double askey_wilson_integral(const ParamSet& p, int terms) {
    const double q = to_double(p.q());
    const double a = to_double(p.a()), b = to_double(p.b()), c = to_double(p.c()), d = to_double(p.d());
    double num = 1, den = 1;
    for (int k = 0; k < terms; ++k) {
        const double qk = std::pow(q, k);
        num *= 1 - a * b * c * d * qk;
        den *= (1 - q * qk) * (1 - a * b * qk) * (1 - a * c * qk) * (1 - a * d * qk) * (1 - b * c * qk) *
               (1 - b * d * qk) * (1 - c * d * qk);
    }
    return num / den;
}

}  // namespace

TEST(Torus, GridValidation) {
    GridSpec g;
    EXPECT_NO_THROW(g.validate());
    g.N = 48;
    EXPECT_THROW(g.validate(), std::invalid_argument);
    g.N = 64;
    g.M = 5;
    EXPECT_THROW(g.validate(), std::invalid_argument);
    EXPECT_LE(auto_grid_size(quadrature_params()), 128);
    EXPECT_EQ(auto_grid_size(default_params()), 512);
}

TEST(Torus, QuadratureRequiresContractingParameters) {
    EXPECT_THROW(make_params("1/2", "2", "2/3", "1/2", "5/7", "4/5").validate_for_quadrature(), std::invalid_argument);
    EXPECT_NO_THROW(default_params().validate_for_quadrature());
}

TEST(Torus, RankOneConstantTermIsAskeyWilsonIntegral) {
    const ParamSet p = quadrature_params();
    GridSpec g;
    const Complex ct = quadrature_constant_term(1, p, g);
    EXPECT_NEAR(ct.real() / askey_wilson_integral(p, 200), 1.0, 1e-10);
    EXPECT_NEAR(gustafson_ct(p, 1, 60) / askey_wilson_integral(p, 200), 1.0, 1e-12);
}

TEST(Torus, PairingOfMonomialsIsConstantTerm) {
    TorusGrid t(2, 16);
    const LaurentPoly x = LaurentPoly::monomial({1, 0}), y = LaurentPoly::monomial({0, 1});
    const ParamSet p = quadrature_params();
    EXPECT_NEAR(std::abs(t.pairing(x, x, WeightKind::None, p, 40) - Complex(1)), 0, 1e-14);
    EXPECT_NEAR(std::abs(t.pairing(x, y, WeightKind::None, p, 40)), 0, 1e-14);
}

TEST(Torus, QuadratureSuitesAtN64) {
    SuiteConfig c;
    c.params = quadrature_params();
    c.grid.N = 64;
    for (const char* s : {"constant-term", "biorthogonality", "norms", "residues", "transform"}) {
        const Report r = run_suite(s, c);
        for (const auto& chk : r.checks) EXPECT_TRUE(chk.pass) << s << ": " << chk.name << " err " << chk.error;
    }
}

TEST(Torus, AdjointIncludingAffineGenerator) {
    const ParamSet p = quadrature_params();
    GridSpec g;
    for (int i = 0; i <= 2; ++i) {
        const Report r = adjoint_check(2, i, p, g, 2, 4, {});
        for (const auto& chk : r.checks) EXPECT_TRUE(chk.pass) << chk.name << " err " << chk.error;
    }
}

TEST(Torus, ResidueRatioMatchesNormFormula) {
    const ParamSet p = quadrature_params();
    GridSpec g;
    const Complex w0 = residue_weight({0, 0}, p, g);
    for (const auto& lam : std::vector<Weight>{{1, 0}, {0, -1}}) {
        const Complex ratio = w0 / residue_weight(lam, p, g);
        EXPECT_LT(rel_err(ratio, Complex(to_double(norm_ratio_ns(lam, p)), 0)), 1e-6) << weight_to_string(lam);
    }
}
