#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace koorn;

namespace {

std::vector<ParamSet> specializations() {
    return {default_params(), quadrature_params(), make_params("2/3", "5/3", "3/7", "4/9", "7/2", "2/11")};
}

}  // namespace

TEST(Hecke, DividedDifferenceAgreesWithReflectionFormula) {
    std::mt19937_64 rng(11);
    for (const auto& p : specializations())
        for (int n = 1; n <= 3; ++n)
            for (int i = 0; i <= n; ++i)
                for (int k = 0; k < 5; ++k) {
                    const auto f = random_laurent(n, rng, 3, 5);
                    const auto beta = simple_root(i, n);
                    EXPECT_TRUE(oracle::is_divided_difference(beta, f, divided_difference(beta, f, p), p.qh))
                        << "i = " << i << " f = " << f.to_text();
                }
}

TEST(Hecke, ReflectionMatchesAffineAction) {
    std::mt19937_64 rng(5);
    const ParamSet p = default_params();
    const auto f = random_laurent(2, rng);
    EXPECT_EQ(apply_si(0, f, p), oracle::reflect(simple_root(0, 2), f, p.qh));
    EXPECT_EQ(apply_si(1, f, p), oracle::reflect(simple_root(1, 2), f, p.qh));
    EXPECT_EQ(apply_si(2, f, p), oracle::reflect(simple_root(2, 2), f, p.qh));
}

TEST(Hecke, RelationsHoldAtThreeSpecializations) {
    for (const auto& p : specializations()) {
        const Report r = check_relations(p, 2, 20, 3);
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
        EXPECT_GT(r.checks.size(), 10u);
    }
}

TEST(Hecke, InverseUndoesOperator) {
    std::mt19937_64 rng(9);
    const ParamSet p = default_params();
    for (int i = 0; i <= 2; ++i) {
        const auto f = random_laurent(2, rng);
        EXPECT_EQ(apply_Ti_inv(i, apply_Ti(i, f, p), p), f);
    }
}

TEST(Hecke, SymmetrizerImagesAreInvariantAndSigned) {
    std::mt19937_64 rng(2);
    const ParamSet p = default_params();
    const auto f = random_laurent(2, rng, 2, 3);
    const auto plus = apply_C(1, f, p);
    const auto minus = apply_C(-1, f, p);
    EXPECT_TRUE(is_w_invariant(plus));
    for (int i = 1; i <= 2; ++i) {
        EXPECT_EQ(apply_Ti(i, plus, p), plus * p.ti(i, 2));
        EXPECT_EQ(apply_Ti(i, minus, p), -minus * inverse(p.ti(i, 2)));
    }
    EXPECT_EQ(apply_C(1, plus, p), plus);
    EXPECT_EQ(apply_C(-1, minus, p), minus);
}

TEST(Hecke, SymmetricOperatorPreservesInvariants) {
    const ParamSet p = default_params();
    const auto m = monomial_symmetric({1, 1});
    EXPECT_TRUE(is_w_invariant(apply_D(m, p)));
    EXPECT_TRUE(is_w_invariant(apply_L_sym(m, p)));
    EXPECT_TRUE(apply_L_sym(LaurentPoly(2, Rational(1)), p).is_zero());
}
