#pragma once

// Reference computations that share no code path with the library routines they check.

#include <map>
#include <set>
#include <vector>

#include <koornwinder/koornwinder.hpp>

namespace oracle {

using koorn::LaurentPoly;
using koorn::Rational;
using koorn::Weight;

// s_beta on monomials straight from the reflection formula
// lambda -> lambda - <lambda, a^vee>(a + k/2 delta) with x^delta = q.
inline LaurentPoly reflect(const koorn::AffineRoot& beta, const LaurentPoly& f, const Rational& qh) {
    const Weight& a = beta.grad;
    long aa = 0;
    for (int v : a) aa += static_cast<long>(v) * v;
    LaurentPoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        long ea = 0;
        for (std::size_t i = 0; i < e.size(); ++i) ea += static_cast<long>(e[i]) * a[i];
        const long pairing = 2 * ea / aa;
        Weight img = e;
        for (std::size_t i = 0; i < e.size(); ++i) img[i] -= static_cast<int>(pairing * a[i]);
        r.add_term(img, c * koorn::pow(qh, -pairing * beta.half_delta));
    }
    return r;
}

// (1 - x^beta) g == f - s_beta f, which pins g = D_beta f uniquely.
inline bool is_divided_difference(const koorn::AffineRoot& beta, const LaurentPoly& f, const LaurentPoly& g,
                                  const Rational& qh) {
    LaurentPoly denom(f.n(), Rational(1));
    denom -= LaurentPoly::monomial(beta.grad, koorn::pow(qh, beta.half_delta));
    return denom * g == f - reflect(beta, f, qh);
}

// The hyperoctahedral group as the closure of the simple reflections, by breadth-first search.
inline std::set<std::vector<int>> brute_force_weyl_group(int n) {
    auto act = [n](const std::vector<int>& images, int i) {
        // images[j] is the signed 1-based image of e_{j+1}.
        std::vector<int> out = images;
        for (auto& v : out) {
            const int s = v > 0 ? 1 : -1;
            int k = std::abs(v);
            if (i == n && k == n) {
                v = -v;
                continue;
            }
            if (i < n) {
                if (k == i) k = i + 1;
                else if (k == i + 1) k = i;
            }
            v = s * k;
        }
        return out;
    };
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) id[static_cast<std::size_t>(j)] = j + 1;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int i = 1; i <= n; ++i) {
                auto u = act(w, i);
                if (seen.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    return seen;
}

inline std::vector<int> signed_images(const koorn::SignedPermutation& w) {
    std::vector<int> out(w.perm().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = w.signs()[i] * (w.perm()[i] + 1);
    return out;
}

// Kernel of a square rational matrix by plain Gaussian elimination, written independently
// of the library's row reduction.
inline std::vector<std::vector<Rational>> kernel(std::vector<std::vector<Rational>> a) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<long> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    std::set<long> pivots(pivot_col.begin(), pivot_col.end());
    for (std::size_t fcol = 0; fcol < cols; ++fcol) {
        if (pivots.count(static_cast<long>(fcol))) continue;
        std::vector<Rational> v(cols);
        v[fcol] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) {
            const auto pc = static_cast<std::size_t>(pivot_col[k]);
            v[pc] = -a[k][fcol] / a[k][pc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Joint eigenvectors of the Y_i on the span of the downset, found as the kernel of one
// combination sum_i c_i (Y_i - gamma_i) with fixed, unrelated weights c_i.
inline std::vector<LaurentPoly> combined_eigen_kernel(const Weight& lam, const koorn::ParamSet& p) {
    const int n = static_cast<int>(lam.size());
    const auto basis = koorn::downset(lam);
    const auto g = koorn::gamma(lam, p);
    std::map<Weight, std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = k;
    std::vector<std::vector<Rational>> m(basis.size(), std::vector<Rational>(basis.size()));
    const Rational weights[] = {Rational(7, 3), Rational(-5, 11), Rational(13, 17), Rational(3, 29)};
    for (int i = 1; i <= n; ++i) {
        const Rational ci = weights[(i - 1) % 4] + i;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            LaurentPoly img = koorn::apply_Yi(i, LaurentPoly::monomial(basis[col]), p);
            img -= LaurentPoly::monomial(basis[col], g[static_cast<std::size_t>(i - 1)]);
            for (const auto& [e, c] : img.terms()) m[idx.at(e)][col] += ci * c;
        }
    }
    std::vector<LaurentPoly> out;
    for (const auto& v : kernel(m)) {
        LaurentPoly f(n);
        for (std::size_t k = 0; k < basis.size(); ++k) f.add_term(basis[k], v[k]);
        out.push_back(f);
    }
    return out;
}

// Monic Askey-Wilson polynomials in z = x + 1/x from the three-term recurrence, expanded in x.
inline std::vector<LaurentPoly> askey_wilson_monic(int max_deg, const Rational& a, const Rational& b, const Rational& c,
                                                   const Rational& d, const Rational& q) {
    const Rational abcd = a * b * c * d;
    auto A = [&](long m) -> Rational {
        return (1 - a * b * koorn::pow(q, m)) * (1 - a * c * koorn::pow(q, m)) * (1 - a * d * koorn::pow(q, m)) *
               (1 - abcd * koorn::pow(q, m - 1)) /
               (a * (1 - abcd * koorn::pow(q, 2 * m - 1)) * (1 - abcd * koorn::pow(q, 2 * m)));
    };
    auto C = [&](long m) -> Rational {
        return a * (1 - koorn::pow(q, m)) * (1 - b * c * koorn::pow(q, m - 1)) * (1 - b * d * koorn::pow(q, m - 1)) *
               (1 - c * d * koorn::pow(q, m - 1)) /
               ((1 - abcd * koorn::pow(q, 2 * m - 2)) * (1 - abcd * koorn::pow(q, 2 * m - 1)));
    };
    const LaurentPoly z = LaurentPoly::monomial({1}) + LaurentPoly::monomial({-1});
    std::vector<LaurentPoly> p{LaurentPoly(1, Rational(1))};
    p.push_back(z - LaurentPoly(1, a + 1 / a - A(0)));
    for (long m = 1; m < max_deg; ++m) {
        const Rational bm = a + 1 / a - A(m) - C(m);
        p.push_back(z * p[static_cast<std::size_t>(m)] - p[static_cast<std::size_t>(m)] * bm -
                    p[static_cast<std::size_t>(m - 1)] * (A(m - 1) * C(m)));
    }
    return p;
}

}  // namespace oracle
