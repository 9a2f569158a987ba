#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace koorn {

// ---------------------------------------------------------------------------
// Affine roots of type C^vee C_n.  A root is grad + (half_delta/2) delta.

enum class Orbit { A0v, A0, Mid, Anv, An };

inline const char* orbit_name(Orbit o) {
    switch (o) {
        case Orbit::A0v: return "a0v";
        case Orbit::A0: return "a0";
        case Orbit::Mid: return "mid";
        case Orbit::Anv: return "anv";
        case Orbit::An: return "an";
    }
    return "?";
}

enum class GradKind { Short, Mid, Long, Invalid };

inline GradKind grad_kind(const Weight& g) {
    int nonzero = 0, abs_sum = 0;
    for (int v : g) {
        if (v != 0) ++nonzero;
        abs_sum += std::abs(v);
    }
    if (nonzero == 1 && abs_sum == 1) return GradKind::Short;
    if (nonzero == 1 && abs_sum == 2) return GradKind::Long;
    if (nonzero == 2 && abs_sum == 2) return GradKind::Mid;
    return GradKind::Invalid;
}

struct AffineRoot {
    Weight grad;
    int half_delta = 0;

    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.half_delta == b.half_delta && a.grad == b.grad;
    }
    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (a.half_delta != b.half_delta) return a.half_delta < b.half_delta;
        return a.grad < b.grad;
    }
};

inline AffineRoot finite_root(const Weight& g) { return AffineRoot{g, 0}; }

inline std::string root_to_string(const AffineRoot& b) {
    std::string s = weight_to_string(b.grad);
    if (b.half_delta != 0) {
        s += b.half_delta > 0 ? " + " : " - ";
        int k = std::abs(b.half_delta);
        s += (k % 2 == 0 ? std::to_string(k / 2) : std::to_string(k) + "/2") + "d";
    }
    return s;
}

inline bool in_S(const AffineRoot& b) {
    switch (grad_kind(b.grad)) {
        case GradKind::Short: return true;
        case GradKind::Mid:
        case GradKind::Long: return b.half_delta % 2 == 0;
        default: return false;
    }
}

// The inmultiplyable roots R: those of S that are not short.
inline bool in_R(const AffineRoot& b) { return in_S(b) && grad_kind(b.grad) != GradKind::Short; }

inline Orbit classify_orbit(const AffineRoot& b) {
    if (!in_S(b)) throw std::invalid_argument("not an affine root of S: " + root_to_string(b));
    switch (grad_kind(b.grad)) {
        case GradKind::Short: return (b.half_delta % 2 != 0) ? Orbit::A0v : Orbit::Anv;
        case GradKind::Long: return ((b.half_delta / 2) % 2 != 0) ? Orbit::A0 : Orbit::An;
        default: return Orbit::Mid;
    }
}

inline bool finite_positive(const Weight& g) {
    for (int v : g)
        if (v != 0) return v > 0;
    return false;
}

inline bool is_positive(const AffineRoot& b) {
    return b.half_delta > 0 || (b.half_delta == 0 && finite_positive(b.grad));
}

// Pairing <lam, alpha^vee> for a finite root alpha of R.
inline long coroot_pairing(const Weight& lam, const Weight& alpha) {
    long p = dot(lam, alpha);
    return grad_kind(alpha) == GradKind::Long ? p / 2 : p;
}

// a_0 = delta - 2 e_1, a_i = e_i - e_{i+1}, a_n = 2 e_n.
inline AffineRoot simple_root(int i, int n) {
    if (i < 0 || i > n) throw std::out_of_range("simple root index out of range");
    Weight g = zero_weight(n);
    if (i == 0) {
        g[0] = -2;
        return AffineRoot{g, 2};
    }
    if (i == n) {
        g[static_cast<std::size_t>(n - 1)] = 2;
        return AffineRoot{g, 0};
    }
    g[static_cast<std::size_t>(i - 1)] = 1;
    g[static_cast<std::size_t>(i)] = -1;
    return AffineRoot{g, 0};
}

// Sigma^+ for C_n: e_i - e_j, e_i + e_j (i<j), 2 e_i.
inline std::vector<Weight> positive_roots(int n) {
    std::vector<Weight> r;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Weight a = zero_weight(n), b = zero_weight(n);
            a[i] = 1, a[j] = -1;
            b[i] = 1, b[j] = 1;
            r.push_back(a);
            r.push_back(b);
        }
    for (int i = 0; i < n; ++i) r.push_back(scaled(unit_weight(n, i), 2));
    return r;
}

inline std::vector<Weight> finite_roots(int n) {
    std::vector<Weight> r;
    for (const auto& a : positive_roots(n)) {
        r.push_back(a);
        r.push_back(-a);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Finite Weyl group W = S_n x| (+-1)^n.  Convention: (w lam)_{perm[i]} = signs[i] * lam[i].

class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
        validate();
    }

    static SignedPermutation identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return SignedPermutation(p, std::vector<int>(static_cast<std::size_t>(n), 1));
    }

    // s_i for i = 1..n: s_i swaps coordinates i, i+1 (i < n); s_n negates coordinate n.
    static SignedPermutation simple(int i, int n) {
        if (i < 1 || i > n) throw std::out_of_range("finite simple reflection index out of range");
        SignedPermutation s = identity(n);
        if (i == n)
            s.signs_[static_cast<std::size_t>(n - 1)] = -1;
        else
            std::swap(s.perm_[static_cast<std::size_t>(i - 1)], s.perm_[static_cast<std::size_t>(i)]);
        return s;
    }

    static SignedPermutation longest(int n) {
        SignedPermutation s = identity(n);
        for (auto& v : s.signs_) v = -1;
        return s;
    }

    int n() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }

    Weight apply(const Weight& lam) const {
        Weight r(lam.size(), 0);
        for (std::size_t i = 0; i < lam.size(); ++i)
            r[static_cast<std::size_t>(perm_[i])] = signs_[i] * lam[i];
        return r;
    }

    SignedPermutation inverse() const {
        std::vector<int> p(perm_.size()), s(perm_.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            p[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
            s[static_cast<std::size_t>(perm_[i])] = signs_[i];
        }
        return SignedPermutation(p, s);
    }

    // (a * b) lam = a (b lam).
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
        std::vector<int> p(b.perm_.size()), s(b.perm_.size());
        for (std::size_t i = 0; i < b.perm_.size(); ++i) {
            auto j = static_cast<std::size_t>(b.perm_[i]);
            p[i] = a.perm_[j];
            s[i] = a.signs_[j] * b.signs_[i];
        }
        return SignedPermutation(p, s);
    }

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.perm_ == b.perm_ && a.signs_ == b.signs_;
    }
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        return a.perm_ != b.perm_ ? a.perm_ < b.perm_ : a.signs_ < b.signs_;
    }

private:
    void validate() const {
        if (perm_.size() != signs_.size()) throw std::invalid_argument("perm/signs length mismatch");
        std::vector<int> sorted(perm_);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("perm is not a bijection");
        for (int s : signs_)
            if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");
    }

    std::vector<int> perm_;
    std::vector<int> signs_;
};

inline std::vector<SignedPermutation> weyl_group(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPermutation> all;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> s(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            all.emplace_back(p, s);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

inline int length(const SignedPermutation& w) {
    int l = 0;
    for (const auto& a : positive_roots(w.n()))
        if (!finite_positive(w.apply(a))) ++l;
    return l;
}

// Sigma^+ cap w^-1 Sigma^-.
inline std::vector<AffineRoot> inversion_set_finite(const SignedPermutation& w) {
    std::vector<AffineRoot> r;
    for (const auto& a : positive_roots(w.n()))
        if (!finite_positive(w.apply(a))) r.push_back(finite_root(a));
    return r;
}

inline LaurentPoly act_weyl(const SignedPermutation& w, const LaurentPoly& f) {
    if (w.n() != f.n()) throw std::invalid_argument("Weyl element and polynomial dimensions differ");
    LaurentPoly r(f.n());
    for (const auto& [e, c] : f.terms()) r.add_term(w.apply(e), c);
    return r;
}

inline Weight dominant(const Weight& lam) {
    Weight d(lam);
    for (auto& v : d) v = std::abs(v);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

inline bool is_dominant(const Weight& lam) { return dominant(lam) == lam; }

inline std::set<Weight> weyl_orbit(const Weight& lam) {
    std::set<Weight> orbit;
    for (const auto& w : weyl_group(static_cast<int>(lam.size()))) orbit.insert(w.apply(lam));
    return orbit;
}

// Minimal-length w with w(lam^+) = lam.
inline SignedPermutation w_lambda(const Weight& lam) {
    const Weight plus = dominant(lam);
    const int n = static_cast<int>(lam.size());
    SignedPermutation best;
    int best_len = -1;
    for (const auto& w : weyl_group(n)) {
        if (w.apply(plus) != lam) continue;
        int l = length(w);
        if (best_len < 0 || l < best_len) {
            best = w;
            best_len = l;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Affine Weyl group: u = tau(trans) w, acting on V by x -> w x + trans.

struct AffineWeylElement {
    SignedPermutation w;
    Weight trans;

    static AffineWeylElement identity(int n) { return {SignedPermutation::identity(n), zero_weight(n)}; }
    static AffineWeylElement translation(const Weight& lam) {
        return {SignedPermutation::identity(static_cast<int>(lam.size())), lam};
    }
    static AffineWeylElement finite(const SignedPermutation& w) { return {w, zero_weight(w.n())}; }

    // s_0 = tau(-e_1) s_{2 e_1}.
    static AffineWeylElement simple(int i, int n) {
        if (i == 0) {
            std::vector<int> p(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n), 1);
            std::iota(p.begin(), p.end(), 0);
            s[0] = -1;
            return {SignedPermutation(p, s), -unit_weight(n, 0)};
        }
        return finite(SignedPermutation::simple(i, n));
    }

    int n() const { return w.n(); }

    friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
        return {a.w * b.w, a.trans + a.w.apply(b.trans)};
    }

    AffineWeylElement inverse() const {
        SignedPermutation wi = w.inverse();
        return {wi, -wi.apply(trans)};
    }

    Weight dot_action(const Weight& x) const { return w.apply(x) + trans; }

    AffineRoot apply(const AffineRoot& b) const {
        Weight g = w.apply(b.grad);
        return AffineRoot{g, b.half_delta + 2 * static_cast<int>(dot(trans, g))};
    }

    friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
        return a.w == b.w && a.trans == b.trans;
    }
};

// Dot action of the simple reflection s_i on V; s_0.x = (-1 - x_1, x_2, ...).
inline Weight dot_simple(int i, const Weight& x) {
    return AffineWeylElement::simple(i, static_cast<int>(x.size())).dot_action(x);
}

// l(tau(lam) w) = sum over alpha in Sigma^+ of | -<lam, w alpha> + chi(w alpha) |.
inline int length(const AffineWeylElement& u) {
    int l = 0;
    for (const auto& a : positive_roots(u.n())) {
        Weight wa = u.w.apply(a);
        long chi = finite_positive(wa) ? 0 : 1;
        l += static_cast<int>(std::labs(-dot(u.trans, wa) + chi));
    }
    return l;
}

// Greedy left descent, lowest index first: u = s_{i_1} ... s_{i_r}.
inline std::vector<int> reduced_word(AffineWeylElement u) {
    const int n = u.n();
    std::vector<int> word;
    int l = length(u);
    while (l > 0) {
        bool found = false;
        for (int i = 0; i <= n; ++i) {
            AffineWeylElement v = AffineWeylElement::simple(i, n) * u;
            int lv = length(v);
            if (lv < l) {
                word.push_back(i);
                u = v;
                l = lv;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no descent found for element of positive length");
    }
    return word;
}

inline AffineWeylElement word_product(const std::vector<int>& word, int n) {
    AffineWeylElement u = AffineWeylElement::identity(n);
    for (int i : word) u = u * AffineWeylElement::simple(i, n);
    return u;
}

// R^+ cap u^-1 R^-: positive roots of R made negative by u.
inline std::vector<AffineRoot> inversion_set(const AffineWeylElement& u) {
    std::vector<AffineRoot> r;
    for (const auto& a : finite_roots(u.n())) {
        Weight wa = u.w.apply(a);
        long shift = dot(u.trans, wa);
        // beta = a + m delta with m >= 0; u beta = wa + (m + shift) delta.
        for (long m = 0; m <= -shift; ++m) {
            AffineRoot beta{a, static_cast<int>(2 * m)};
            if (!is_positive(beta)) continue;
            if (!is_positive(u.apply(beta))) r.push_back(beta);
        }
    }
    std::sort(r.begin(), r.end());
    return r;
}

// R^+ cap tau(lam) R^- for dominant lam.
inline std::vector<AffineRoot> inversion_set_translation(const Weight& lam) {
    if (!is_dominant(lam)) throw std::invalid_argument("weight is not dominant: " + weight_to_string(lam));
    return inversion_set(AffineWeylElement::translation(-lam));
}

// ---------------------------------------------------------------------------
// Multiplicity functions on the five orbits.

struct MultiplicityData {
    Rational t0, t0v, t, tn, tnv;

    const Rational& value(Orbit o) const {
        switch (o) {
            case Orbit::A0v: return t0v;
            case Orbit::A0: return t0;
            case Orbit::Mid: return t;
            case Orbit::Anv: return tnv;
            case Orbit::An: return tn;
        }
        throw std::logic_error("bad orbit");
    }

    // t_f, with t_f = 1 for f outside S.
    Rational at(const AffineRoot& b) const { return in_S(b) ? value(classify_orbit(b)) : Rational(1); }

    // t_{beta/2}: only long roots have a half in S.
    Rational half_at(const AffineRoot& b) const {
        if (grad_kind(b.grad) != GradKind::Long) return 1;
        Weight g = b.grad;
        for (auto& v : g) v /= 2;
        return at(AffineRoot{g, b.half_delta / 2});
    }

    Rational simple(int i, int n) const { return at(simple_root(i, n)); }

    void validate() const {
        for (const Rational* v : {&t0, &t0v, &t, &tn, &tnv})
            if (*v == 0) throw std::invalid_argument("multiplicity values must be nonzero");
    }

    friend bool operator==(const MultiplicityData& a, const MultiplicityData& b) {
        return a.t0 == b.t0 && a.t0v == b.t0v && a.t == b.t && a.tn == b.tn && a.tnv == b.tnv;
    }
};

inline MultiplicityData dual_mult(const MultiplicityData& m) { return {m.tnv, m.t0v, m.t, m.tn, m.t0}; }

inline MultiplicityData inverse_mult(const MultiplicityData& m) {
    return {inverse(m.t0), inverse(m.t0v), inverse(m.t), inverse(m.tn), inverse(m.tnv)};
}

// Multiply by q^{1/2} on the middle orbit and by q on the a_n orbit.
inline MultiplicityData qshift_mult(const MultiplicityData& m, const Rational& qh) {
    return {m.t0, m.t0v, m.t * qh, m.tn * qh * qh, m.tnv};
}

inline Rational t_word(const std::vector<int>& word, int n, const MultiplicityData& m) {
    Rational r = 1;
    for (int i : word) r *= m.simple(i, n);
    return r;
}

inline Rational t_w(const AffineWeylElement& u, const MultiplicityData& m) { return t_word(reduced_word(u), u.n(), m); }

inline Rational t_w(const SignedPermutation& w, const MultiplicityData& m) {
    return t_w(AffineWeylElement::finite(w), m);
}

// ---------------------------------------------------------------------------
// rho(lam) and the order on weights.

struct RhoVectors {
    Weight rho_m;
    Weight rho_l;
};

inline RhoVectors rho_vectors(const Weight& lam) {
    const int n = static_cast<int>(lam.size());
    RhoVectors r{zero_weight(n), zero_weight(n)};
    for (const auto& a : positive_roots(n)) {
        int eps = dot(lam, a) >= 0 ? 1 : -1;
        if (grad_kind(a) == GradKind::Long) {
            Weight half = a;
            for (auto& v : half) v /= 2;
            r.rho_l = r.rho_l + scaled(half, eps);
        } else {
            r.rho_m = r.rho_m + scaled(a, eps);
        }
    }
    // Cross-check against w_lam applied to rho_m = 2 sum (n-i) e_i, rho_l = sum e_i.
    Weight rm = zero_weight(n), rl = zero_weight(n);
    for (int i = 0; i < n; ++i) {
        rm[static_cast<std::size_t>(i)] = 2 * (n - 1 - i);
        rl[static_cast<std::size_t>(i)] = 1;
    }
    SignedPermutation w = w_lambda(lam);
    if (w.apply(rm) != r.rho_m || w.apply(rl) != r.rho_l)
        throw std::logic_error("rho(lambda) sign-sum disagrees with w_lambda rho for " + weight_to_string(lam));
    return r;
}

// mu - lam in the nonnegative span of the simple coroots (all partial sums >= 0).
inline bool dominance_leq(const Weight& lam, const Weight& mu) {
    long s = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        s += mu[i] - lam[i];
        if (s < 0) return false;
    }
    return true;
}

inline bool preceq(const Weight& lam, const Weight& mu) {
    Weight lp = dominant(lam), mp = dominant(mu);
    if (lp != mp) return dominance_leq(lp, mp);
    return dominance_leq(lam, mu);
}

// Strictly increasing along the order: sum over k of the k-th partial sum.
inline long order_height(const Weight& lam) {
    long h = 0, s = 0;
    for (int v : lam) {
        s += v;
        h += s;
    }
    return h;
}

inline bool linear_extension_less(const Weight& a, const Weight& b) {
    Weight ap = dominant(a), bp = dominant(b);
    long ha = order_height(ap), hb = order_height(bp);
    if (ha != hb) return ha < hb;
    if (ap != bp) return ap < bp;
    long ga = order_height(a), gb = order_height(b);
    if (ga != gb) return ga < gb;
    return a < b;
}

inline std::vector<Weight> dominant_weights_below(const Weight& lam_plus) {
    const int n = static_cast<int>(lam_plus.size());
    const int bound = lam_plus.empty() ? 0 : lam_plus[0];
    std::vector<Weight> out;
    Weight cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int cap) -> void {
        if (pos == n) {
            if (dominance_leq(cur, lam_plus)) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), linear_extension_less);
    return out;
}

// All mu with mu <= lam, smallest first in a linear extension of the order.
inline std::vector<Weight> downset(const Weight& lam) {
    std::vector<Weight> out;
    for (const auto& nu : dominant_weights_below(dominant(lam)))
        for (const auto& mu : weyl_orbit(nu))
            if (preceq(mu, lam)) out.push_back(mu);
    std::sort(out.begin(), out.end(), linear_extension_less);
    return out;
}

}  // namespace koorn
