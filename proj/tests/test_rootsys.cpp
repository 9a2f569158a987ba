#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace koorn;

TEST(RootSystem, CountsAndOrbits) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(positive_roots(n).size(), static_cast<std::size_t>(n * n));
        EXPECT_EQ(finite_roots(n).size(), static_cast<std::size_t>(2 * n * n));
    }
    const int n = 3;
    EXPECT_EQ(classify_orbit(simple_root(0, n)), Orbit::A0);
    EXPECT_EQ(classify_orbit(simple_root(1, n)), Orbit::Mid);
    EXPECT_EQ(classify_orbit(simple_root(n, n)), Orbit::An);
    EXPECT_EQ(classify_orbit(AffineRoot{{1, 0, 0}, 0}), Orbit::Anv);
    EXPECT_EQ(classify_orbit(AffineRoot{{-1, 0, 0}, 1}), Orbit::A0v);
    EXPECT_FALSE(in_S(AffineRoot{{2, 0, 0}, 1}));
    EXPECT_TRUE(in_R(AffineRoot{{2, 0, 0}, 2}));
}

TEST(RootSystem, WeylGroupMatchesClosureOfSimpleReflections) {
    for (int n = 1; n <= 4; ++n) {
        const auto brute = oracle::brute_force_weyl_group(n);
        std::set<std::vector<int>> lib;
        for (const auto& w : weyl_group(n)) lib.insert(oracle::signed_images(w));
        EXPECT_EQ(lib, brute) << "n = " << n;
    }
}

TEST(RootSystem, LengthEqualsInversionCount) {
    const int n = 3;
    for (const auto& w : weyl_group(n)) {
        EXPECT_EQ(static_cast<std::size_t>(length(w)), inversion_set_finite(w).size());
        EXPECT_EQ(w * w.inverse(), SignedPermutation::identity(n));
    }
    EXPECT_EQ(length(SignedPermutation::longest(n)), n * n);
    for (const auto& w : weyl_group(n)) EXPECT_LE(length(w), n * n);
}

TEST(RootSystem, WLambdaIsMinimal) {
    for (const auto& lam : std::vector<Weight>{{0, 0}, {1, 0}, {0, -1}, {-2, 1}, {1, -1}, {1, 1}, {-1, 2, 0}}) {
        const auto w = w_lambda(lam);
        EXPECT_EQ(w.apply(dominant(lam)), lam);
        for (const auto& u : weyl_group(static_cast<int>(lam.size())))
            if (u.apply(dominant(lam)) == lam) {
                EXPECT_LE(length(w), length(u));
            }
    }
}

TEST(RootSystem, AffineReducedWordsReproduceElement) {
    const int n = 2;
    for (const auto& lam : std::vector<Weight>{{1, 0}, {0, -1}, {2, -1}, {-1, -1}}) {
        const auto u = AffineWeylElement::translation(lam);
        const auto word = reduced_word(u);
        EXPECT_EQ(word_product(word, n), u);
        EXPECT_EQ(static_cast<int>(word.size()), length(u));
        EXPECT_EQ(static_cast<std::size_t>(length(u)), inversion_set(u).size());
    }
    // s_0 squares to the identity and moves e_1 to -e_1 + delta.
    const auto s0 = AffineWeylElement::simple(0, n);
    EXPECT_EQ(s0 * s0, AffineWeylElement::identity(n));
    EXPECT_EQ(dot_simple(0, Weight{0, 0}), (Weight{-1, 0}));
}

TEST(RootSystem, TranslationInversionSet) {
    // With translations by Z^n and long roots 2e_i + m delta, the count is sum over alpha > 0 of |(lambda, alpha)|.
    for (const auto& lam : std::vector<Weight>{{1, 0}, {1, 1}, {2, 1}, {3, 0}}) {
        long expect = 0;
        for (const auto& a : positive_roots(2)) expect += std::labs(dot(lam, a));
        EXPECT_EQ(static_cast<long>(inversion_set_translation(lam).size()), expect) << weight_to_string(lam);
        EXPECT_EQ(length(AffineWeylElement::translation(lam)), expect);
    }
    EXPECT_THROW(inversion_set_translation({0, 1}), std::invalid_argument);
}

TEST(RootSystem, DownsetIsOrderedAndEndsAtGenerator) {
    for (const auto& lam : std::vector<Weight>{{0, 0}, {1, 0}, {-1, 1}, {0, -2}, {1, -1, 1}}) {
        const auto d = downset(lam);
        ASSERT_FALSE(d.empty());
        EXPECT_EQ(d.back(), lam);
        for (std::size_t i = 0; i < d.size(); ++i) {
            EXPECT_TRUE(preceq(d[i], lam));
            for (std::size_t j = i + 1; j < d.size(); ++j) EXPECT_FALSE(preceq(d[j], d[i]) && d[j] != d[i]);
        }
    }
    // Within a Weyl orbit the dominant weight is the maximum and -lambda+ the minimum.
    const auto orbit = downset({-1, 0});
    EXPECT_TRUE(preceq({-1, 0}, {1, 0}));
    EXPECT_FALSE(preceq({1, 0}, {-1, 0}));
    EXPECT_EQ(orbit.back(), (Weight{-1, 0}));
}

TEST(RootSystem, MultiplicityVariants) {
    const ParamSet p = default_params();
    const auto d = p.dual().mult;
    EXPECT_EQ(d.t0, p.mult.tnv);
    EXPECT_EQ(d.tnv, p.mult.t0);
    EXPECT_EQ(p.dual().dual(), p);
    EXPECT_EQ(p.inverse().inverse(), p);
    EXPECT_EQ(p.inverse().qh, 1 / p.qh);
    const auto s = p.qshift().mult;
    EXPECT_EQ(s.t, p.mult.t * p.qh);
    EXPECT_EQ(s.tn, p.mult.tn * p.q());
    EXPECT_EQ(s.t0, p.mult.t0);
}

TEST(RootSystem, RhoVectorsAtDominantWeight) {
    const auto r = rho_vectors({2, 1, 0});
    EXPECT_EQ(r.rho_m, (Weight{4, 2, 0}));
    EXPECT_EQ(r.rho_l, (Weight{1, 1, 1}));
}
