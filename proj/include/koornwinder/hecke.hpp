#pragma once

#include <functional>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "spectrum.hpp"

namespace koorn {

// x^{grad + (k/2) delta} as a Laurent polynomial: qh^k x^grad.
inline LaurentPoly affine_monomial(const AffineRoot& b, const Rational& qh) {
    return LaurentPoly::monomial(b.grad, pow(qh, b.half_delta));
}

inline AffineRoot half_root(const AffineRoot& b) {
    Weight g = b.grad;
    for (auto& v : g) v /= 2;
    return AffineRoot{g, b.half_delta / 2};
}

// D_beta f = (f - s_beta f) / (1 - x^beta), expanded as a finite geometric sum per monomial.
inline LaurentPoly divided_difference(const AffineRoot& beta, const LaurentPoly& f, const Rational& q) {
    if (!in_R(beta)) throw std::invalid_argument("divided difference needs a root of R, got " + root_to_string(beta));
    const Weight& a = beta.grad;
    const Rational qm = pow(q, beta.half_delta / 2);
    const Rational qm_inv = inverse(qm);
    LaurentPoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        long k = coroot_pairing(e, a);
        if (k > 0) {
            // -x^{lam - beta} - ... - x^{lam - k beta}
            Rational coef = -c;
            Weight cur = e;
            for (long j = 1; j <= k; ++j) {
                coef *= qm_inv;
                cur = cur - a;
                r.add_term(cur, coef);
            }
        } else if (k < 0) {
            // x^lam + x^{lam + beta} + ... + x^{lam - (1 + k) beta}
            Rational coef = c;
            Weight cur = e;
            for (long j = 0; j < -k; ++j) {
                r.add_term(cur, coef);
                coef *= qm;
                cur = cur + a;
            }
        }
    }
    return r;
}

inline LaurentPoly divided_difference(const AffineRoot& beta, const LaurentPoly& f, const ParamSet& p) {
    return divided_difference(beta, f, p.q());
}

// Numerator of v_beta: (1 - t_b t_{b/2} x^{b/2})(1 + t_b t_{b/2}^-1 x^{b/2}), or 1 - t_b^2 x^b.
inline LaurentPoly tv_factor(const AffineRoot& beta, const MultiplicityData& m, const Rational& qh) {
    const int n = static_cast<int>(beta.grad.size());
    const Rational tb = m.at(beta);
    LaurentPoly one(n, Rational(1));
    if (grad_kind(beta.grad) != GradKind::Long) return one - affine_monomial(beta, qh) * (tb * tb);
    const Rational th = m.half_at(beta);
    LaurentPoly h = affine_monomial(half_root(beta), qh);
    return (one - h * (tb * th)) * (one + h * (tb / th));
}

// Simple reflection s_i acting on functions (s_0 through the affine substitution).
inline LaurentPoly apply_si(int i, const LaurentPoly& f, const ParamSet& p) {
    if (i == 0) return act_s0(f, p.q());
    return act_weyl(SignedPermutation::simple(i, f.n()), f);
}

// T_i = t_i + t_i^-1 v_{a_i}(x)(s_i - id), computed as t_i f - t_i^-1 tv(a_i) D_{a_i} f.
inline LaurentPoly apply_Ti(int i, const LaurentPoly& f, const ParamSet& p) {
    const int n = f.n();
    const AffineRoot beta = simple_root(i, n);
    const Rational ti = p.mult.at(beta);
    LaurentPoly d = divided_difference(beta, f, p.q());
    return f * ti - tv_factor(beta, p.mult, p.qh) * d * inverse(ti);
}

inline LaurentPoly apply_Ti_inv(int i, const LaurentPoly& f, const ParamSet& p) {
    const Rational ti = p.ti(i, f.n());
    return apply_Ti(i, f, p) - f * (ti - inverse(ti));
}

// A factor of an operator word: T_i or T_i^-1.
struct HeckeLetter {
    int index;
    bool inverted;
};

// Letters are listed in application order (rightmost factor first).
inline LaurentPoly apply_letters(const std::vector<HeckeLetter>& letters, LaurentPoly f, const ParamSet& p) {
    for (const auto& l : letters) f = l.inverted ? apply_Ti_inv(l.index, f, p) : apply_Ti(l.index, f, p);
    return f;
}

// T_w for a word s_{i_1} ... s_{i_r}: T_{i_1}( ... T_{i_r} f).
inline LaurentPoly apply_word(const std::vector<int>& word, LaurentPoly f, const ParamSet& p) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = apply_Ti(*it, f, p);
    return f;
}

// Y_i = T_i ... T_{n-1} T_n T_{n-1} ... T_1 T_0 T_1^-1 ... T_{i-1}^-1, in application order.
inline std::vector<HeckeLetter> y_letters(int i, int n, bool inverted) {
    std::vector<HeckeLetter> word;  // written left to right as in the product
    for (int j = i; j <= n; ++j) word.push_back({j, false});
    for (int j = n - 1; j >= 1; --j) word.push_back({j, false});
    word.push_back({0, false});
    for (int j = 1; j <= i - 1; ++j) word.push_back({j, true});
    std::vector<HeckeLetter> order;
    if (!inverted) {
        order.assign(word.rbegin(), word.rend());
    } else {
        for (auto l : word) order.push_back({l.index, !l.inverted});
    }
    return order;
}

inline LaurentPoly apply_Yi(int i, const LaurentPoly& f, const ParamSet& p, bool inverted = false) {
    return apply_letters(y_letters(i, f.n(), inverted), f, p);
}

// Y^lam = prod_i Y_i^{lam_i}; the factors commute.
inline LaurentPoly apply_Y(const Weight& lam, LaurentPoly f, const ParamSet& p) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const int k = lam[i];
        for (int r = 0; r < std::abs(k); ++r) f = apply_Yi(static_cast<int>(i) + 1, f, p, k < 0);
    }
    return f;
}

// h(Y) g for a Laurent polynomial h.
inline LaurentPoly apply_poly_Y(const LaurentPoly& h, const LaurentPoly& g, const ParamSet& p) {
    LaurentPoly r(g.n());
    for (const auto& [e, c] : h.terms()) r += apply_Y(e, g, p) * c;
    return r;
}

// S_i = T_i Y^{a_i} - Y^{a_i} T_i for i = 1..n.
inline LaurentPoly apply_Si(int i, const LaurentPoly& f, const ParamSet& p) {
    const int n = f.n();
    if (i < 1 || i > n) throw std::out_of_range("intertwiner index must be in 1..n");
    const Weight ai = simple_root(i, n).grad;
    return apply_Ti(i, apply_Y(ai, f, p), p) - apply_Y(ai, apply_Ti(i, f, p), p);
}

// T_0^vee = T_0^-1 z^{-a_0^vee} = q^{-1/2} T_0^-1 z_1.
inline LaurentPoly apply_T0_vee(const LaurentPoly& f, const ParamSet& p) {
    return apply_Ti_inv(0, f.shifted(unit_weight(f.n(), 0), inverse(p.qh)), p);
}

// T_n^vee = z_n^-1 T_n^-1.
inline LaurentPoly apply_Tn_vee(const LaurentPoly& f, const ParamSet& p) {
    const int n = f.n();
    return apply_Ti_inv(n, f, p).shifted(-unit_weight(n, n - 1));
}

// U_n = T_1 ... T_{n-1} T_n^vee T_{n-1}^-1 ... T_1^-1.
inline LaurentPoly apply_Un(LaurentPoly f, const ParamSet& p) {
    const int n = f.n();
    for (int j = 1; j <= n - 1; ++j) f = apply_Ti_inv(j, f, p);
    f = apply_Tn_vee(f, p);
    for (int j = n - 1; j >= 1; --j) f = apply_Ti(j, f, p);
    return f;
}

// Visits every w in W together with l(w), t_w and T_w f, building T_w f by
// left multiplication along reduced words.
inline void for_each_Tw(const LaurentPoly& f, const ParamSet& p,
                        const std::function<void(const SignedPermutation&, int, const Rational&, const LaurentPoly&)>& visit) {
    const int n = f.n();
    struct Node {
        SignedPermutation w;
        int len;
        Rational tw;
        LaurentPoly image;
    };
    std::set<SignedPermutation> seen;
    std::queue<Node> frontier;
    frontier.push({SignedPermutation::identity(n), 0, Rational(1), f});
    seen.insert(SignedPermutation::identity(n));
    while (!frontier.empty()) {
        Node cur = std::move(frontier.front());
        frontier.pop();
        visit(cur.w, cur.len, cur.tw, cur.image);
        for (int i = 1; i <= n; ++i) {
            SignedPermutation next = SignedPermutation::simple(i, n) * cur.w;
            if (seen.count(next) || length(next) != cur.len + 1) continue;
            seen.insert(next);
            frontier.push({next, cur.len + 1, cur.tw * p.ti(i, n), apply_Ti(i, cur.image, p)});
        }
    }
}

// C_+- = (sum_w t_w^{+-2})^-1 sum_w (+-1)^{l(w)} t_w^{+-1} T_w.
inline LaurentPoly apply_C(int sign, const LaurentPoly& f, const ParamSet& p) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("idempotent sign must be +1 or -1");
    LaurentPoly acc(f.n());
    Rational norm = 0;
    for_each_Tw(f, p, [&](const SignedPermutation&, int len, const Rational& tw, const LaurentPoly& image) {
        Rational tws = sign > 0 ? tw : inverse(tw);
        norm += tws * tws;
        Rational coef = tws;
        if (sign < 0 && len % 2 == 1) coef = -coef;
        acc += image * coef;
    });
    return acc * inverse(norm);
}

inline bool is_w_invariant(const LaurentPoly& f) {
    for (int i = 1; i <= f.n(); ++i)
        if (act_weyl(SignedPermutation::simple(i, f.n()), f) != f) return false;
    return true;
}

// Sum_i (Y_i + Y_i^-1) f, which equals the symmetric Koornwinder operator on W-invariants.
inline LaurentPoly apply_D(const LaurentPoly& f, const ParamSet& p) {
    LaurentPoly r(f.n());
    for (int i = 1; i <= f.n(); ++i) {
        r += apply_Yi(i, f, p, false);
        r += apply_Yi(i, f, p, true);
    }
    return r;
}

// L = D - m_{e_1}(gamma_0) on W-invariant Laurent polynomials.
inline LaurentPoly apply_L_sym(const LaurentPoly& f, const ParamSet& p) {
    if (!is_w_invariant(f)) throw std::invalid_argument("the operator L acts on W-invariant polynomials only");
    return apply_D(f, p) - f * m_e1(gamma(zero_weight(f.n()), p));
}

// ---------------------------------------------------------------------------
// Relation checks for the affine and double affine Hecke algebra.

namespace detail {

using Op = std::function<LaurentPoly(const LaurentPoly&)>;

inline int coxeter_order(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    if (j - i >= 2) return 2;
    if ((i == 0 && j == 1) || (i == n - 1 && j == n)) return 4;
    return 3;
}

inline LaurentPoly alternate(const Op& a, const Op& b, int m, LaurentPoly f) {
    // (... a b a) with m factors, applied right to left starting from a.
    for (int k = 0; k < m; ++k) f = (k % 2 == 0) ? a(f) : b(f);
    return f;
}

}  // namespace detail

inline Report check_relations(const ParamSet& p, int n, int trials, std::uint64_t seed) {
    using detail::Op;
    std::mt19937_64 rng(seed);
    std::vector<LaurentPoly> inputs;
    for (int k = 0; k < trials; ++k) inputs.push_back(random_laurent(n, rng));

    Report report;
    report.suite = "relations";
    const Rational q = p.q();

    std::vector<Op> T, Tv;
    for (int i = 0; i <= n; ++i) T.push_back([i, &p](const LaurentPoly& f) { return apply_Ti(i, f, p); });
    Tv = T;
    Tv[0] = [&p](const LaurentPoly& f) { return apply_T0_vee(f, p); };
    Tv[static_cast<std::size_t>(n)] = [&p](const LaurentPoly& f) { return apply_Tn_vee(f, p); };

    auto quadratic = [&](const std::string& name, const Op& op, const Rational& t, const std::string& identity) {
        ExactTally tally(name, identity);
        for (const auto& f : inputs) {
            LaurentPoly tf = op(f);
            tally.record(op(tf) + tf * (inverse(t) - t) - f == LaurentPoly(n), &f);
        }
        tally.emit(report);
    };

    for (int i = 0; i <= n; ++i) {
        quadratic("quadratic T_" + std::to_string(i), T[static_cast<std::size_t>(i)], p.ti(i, n),
                  "(T_i - t_i)(T_i + t_i^-1) = 0");
        ExactTally inv("inverse T_" + std::to_string(i), "T_i^-1 T_i = id");
        for (const auto& f : inputs) inv.record(apply_Ti_inv(i, apply_Ti(i, f, p), p) == f, &f);
        inv.emit(report);
    }
    quadratic("quadratic T_0^vee", Tv[0], p.mult.t0v, "(T_0^vee - t_0^vee)(T_0^vee + (t_0^vee)^-1) = 0");
    quadratic("quadratic T_n^vee", Tv[static_cast<std::size_t>(n)], p.mult.tnv,
              "(T_n^vee - t_n^vee)(T_n^vee + (t_n^vee)^-1) = 0");

    auto braids = [&](const std::vector<Op>& gens, const std::string& family) {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                int m = detail::coxeter_order(i, j, n);
                std::string name = "braid " + family + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
                ExactTally tally(name, "affine C_n braid relation of length " + std::to_string(m));
                for (const auto& f : inputs) {
                    LaurentPoly lhs = detail::alternate(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)], m, f);
                    LaurentPoly rhs = detail::alternate(gens[static_cast<std::size_t>(j)], gens[static_cast<std::size_t>(i)], m, f);
                    tally.record(lhs == rhs, &f);
                }
                tally.emit(report);
            }
    };
    braids(T, "T");
    braids(Tv, "T^vee");

    {
        ExactTally tally("compatibility word",
                         "T_n^vee T_n T_{n-1} ... T_1 T_0 T_0^vee T_1 ... T_{n-1} = q^{-1/2}");
        std::vector<LaurentPoly> cases = inputs;
        cases.insert(cases.begin(), LaurentPoly(n, Rational(1)));
        for (const auto& f : cases) {
            LaurentPoly g = f;
            for (int j = n - 1; j >= 1; --j) g = apply_Ti(j, g, p);
            g = Tv[0](g);
            g = apply_Ti(0, g, p);
            for (int j = 1; j <= n; ++j) g = apply_Ti(j, g, p);
            g = Tv[static_cast<std::size_t>(n)](g);
            tally.record(g == f * inverse(p.qh), &f);
        }
        tally.emit(report);
    }

    {
        ExactTally t1("commute T_0 T_n^vee", "[T_0, T_n^vee] = 0");
        ExactTally t2("commute T_0^vee T_n", "[T_0^vee, T_n] = 0");
        for (const auto& f : inputs) {
            t1.record(T[0](Tv[static_cast<std::size_t>(n)](f)) == Tv[static_cast<std::size_t>(n)](T[0](f)), &f);
            t2.record(Tv[0](T[static_cast<std::size_t>(n)](f)) == T[static_cast<std::size_t>(n)](Tv[0](f)), &f);
        }
        t1.emit(report);
        t2.emit(report);
    }

    // f(z) T_i - T_i (s_i f)(z) = [(t - t^-1) + (t_h - t_h^-1) z^{a_i/2}] D_{a_i}(f)(z).
    for (int i = 0; i <= n; ++i) {
        ExactTally tally("multiplication commutator i=" + std::to_string(i),
                         "f(z)T_i - T_i(s_i f)(z) = ((t - t^-1) + (t_h - t_h^-1) z^{a_i/2}) (f - s_i f)/(1 - z^{a_i})");
        const AffineRoot beta = simple_root(i, n);
        const Rational tb = p.mult.at(beta), th = p.mult.half_at(beta);
        LaurentPoly coef(n, tb - inverse(tb));
        if (grad_kind(beta.grad) == GradKind::Long)
            coef += affine_monomial(half_root(beta), p.qh) * (th - inverse(th));
        for (int j = 0; j < n; ++j) {
            LaurentPoly mf = LaurentPoly::monomial(unit_weight(n, j));
            LaurentPoly rhs_mult = coef * divided_difference(beta, mf, q);
            LaurentPoly smf = apply_si(i, mf, p);
            for (const auto& g : inputs) {
                LaurentPoly lhs = mf * apply_Ti(i, g, p) - apply_Ti(i, smf * g, p);
                tally.record(lhs == rhs_mult * g, &g);
            }
        }
        tally.emit(report);
    }

    // Lusztig: T_i f(Y) - (s_i f)(Y) T_i = ((t~ - t~^-1) + (t~_h - t~_h^-1) Y^{-a_i/2}) (f - s_i f)(Y)/(1 - Y^{-a_i}).
    {
        const MultiplicityData dm = dual_mult(p.mult);
        LaurentPoly fY = LaurentPoly::monomial(unit_weight(n, 0));
        for (int i = 1; i <= n; ++i) {
            ExactTally tally("Lusztig relation i=" + std::to_string(i),
                             "T_i f(Y) - (s_i f)(Y) T_i = ((t~ - t~^-1) + (t~_h - t~_h^-1) Y^{-a_i/2}) (f(Y) - (s_i f)(Y))/(1 - Y^{-a_i}), f = x_1");
            const AffineRoot beta = simple_root(i, n);
            AffineRoot neg{-beta.grad, 0};
            const Rational tb = dm.at(beta), th = dm.half_at(beta);
            LaurentPoly coef(n, tb - inverse(tb));
            if (grad_kind(beta.grad) == GradKind::Long)
                coef += LaurentPoly::monomial(-half_root(beta).grad, th - inverse(th));
            LaurentPoly h = coef * divided_difference(neg, fY, q);
            LaurentPoly sf = apply_si(i, fY, p);
            for (const auto& g : inputs) {
                LaurentPoly lhs = apply_Ti(i, apply_poly_Y(fY, g, p), p) - apply_poly_Y(sf, apply_Ti(i, g, p), p);
                tally.record(lhs == apply_poly_Y(h, g, p), &g);
            }
            tally.emit(report);
        }
    }
    return report;
}

}  // namespace koorn
