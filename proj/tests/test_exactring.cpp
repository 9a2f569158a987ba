#include <gtest/gtest.h>

#include <koornwinder/laurent.hpp>

using namespace koorn;

TEST(Rational, ParsesAndCanonicalizes) {
    EXPECT_EQ(parse_rational("6/8"), frac(3, 4));
    EXPECT_EQ(parse_rational(" -2/4 "), frac(-1, 2));
    EXPECT_EQ(parse_rational("+7"), Rational(7));
    EXPECT_EQ(to_string(parse_rational("10/5")), "2");
}

TEST(Rational, RejectsMalformedInput) {
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(frac(1, 0), std::domain_error);
}

TEST(Rational, IntegerPowers) {
    EXPECT_EQ(pow(frac(2, 3), 3), frac(8, 27));
    EXPECT_EQ(pow(frac(2, 3), -2), frac(9, 4));
    EXPECT_EQ(pow(frac(5, 7), 0), Rational(1));
    EXPECT_THROW(pow(Rational(0), -1), std::domain_error);
}

TEST(Laurent, RingOperations) {
    const LaurentPoly x = LaurentPoly::monomial({1, 0});
    const LaurentPoly y = LaurentPoly::monomial({0, 1});
    const LaurentPoly xi = LaurentPoly::monomial({-1, 0});
    EXPECT_EQ(x * xi, LaurentPoly(2, Rational(1)));
    const LaurentPoly f = x + y * frac(1, 2);
    const LaurentPoly g = f * f;
    EXPECT_EQ(g.coeff({1, 1}), Rational(1));
    EXPECT_EQ(g.coeff({0, 2}), frac(1, 4));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ((f * Rational(0)).size(), 0u);
}

TEST(Laurent, EvaluationAgreesWithHandComputation) {
    LaurentPoly f(2);
    f.add_term({2, -1}, frac(3, 2));
    f.add_term({0, 0}, Rational(-1));
    // 3/2 * (1/2)^2 * (3)^-1 - 1 = 1/8 - 1
    EXPECT_EQ(f.eval({frac(1, 2), Rational(3)}), frac(-7, 8));
    const auto z = f.eval(std::vector<std::complex<double>>{{0.5, 0}, {3, 0}});
    EXPECT_NEAR(z.real(), -0.875, 1e-15);
}

TEST(Laurent, CancellationRemovesTerms) {
    LaurentPoly f(1);
    f.add_term({3}, Rational(2));
    f.add_term({3}, Rational(-2));
    EXPECT_TRUE(f.is_zero());
}

TEST(Laurent, AffineReflectionAndInversion) {
    const Rational q = frac(1, 4);
    const LaurentPoly f = LaurentPoly::monomial({2, 1}, Rational(5));
    const LaurentPoly g = act_s0(f, q);
    EXPECT_EQ(g.coeff({-2, 1}), Rational(5) * q * q);
    EXPECT_EQ(act_s0(g, q), f);
    EXPECT_EQ(invert_variables(invert_variables(f)), f);
    EXPECT_EQ(invert_variables(f).coeff({-2, -1}), Rational(5));
}

TEST(Laurent, TextForm) {
    EXPECT_EQ(LaurentPoly(2, Rational(1)).to_text(), "1");
    EXPECT_EQ(LaurentPoly(2).to_text(), "0");
    const std::string s = (LaurentPoly::monomial({1, 0}) + LaurentPoly::monomial({0, -1}, frac(1, 5))).to_text();
    EXPECT_NE(s.find("x1"), std::string::npos);
    EXPECT_NE(s.find("x2^-1"), std::string::npos);
}

TEST(Laurent, DimensionMismatchThrows) {
    LaurentPoly a(2), b(3);
    EXPECT_THROW(a += b, std::invalid_argument);
}
