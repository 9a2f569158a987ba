#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace koorn {

// An element of the weight lattice Z^n, also used as a Laurent exponent.
using Weight = std::vector<int>;

inline Weight zero_weight(int n) { return Weight(static_cast<std::size_t>(n), 0); }

inline Weight unit_weight(int n, int i) {
    Weight e = zero_weight(n);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

inline Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Weight operator-(const Weight& a) {
    Weight r(a);
    for (auto& v : r) v = -v;
    return r;
}

inline Weight scaled(const Weight& a, int k) {
    Weight r(a);
    for (auto& v : r) v *= k;
    return r;
}

inline long dot(const Weight& a, const Weight& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

inline std::string weight_to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

class LaurentPoly {
public:
    using TermMap = std::map<Weight, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(int n) : n_(n) { check_dim(n); }
    LaurentPoly(int n, const Rational& c) : n_(n) {
        check_dim(n);
        if (c != 0) terms_.emplace(zero_weight(n), c);
    }

    static LaurentPoly monomial(const Weight& e, const Rational& c = 1) {
        LaurentPoly p(static_cast<int>(e.size()));
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Weight& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Weight& e, const Rational& c) {
        if (static_cast<int>(e.size()) != n_)
            throw std::invalid_argument("exponent length does not match dimension");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& g) {
        check_same(g);
        for (const auto& [e, c] : g.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& g) {
        check_same(g);
        for (const auto& [e, c] : g.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator-(LaurentPoly f) { return f *= Rational(-1); }
    friend LaurentPoly operator*(LaurentPoly f, const Rational& s) { return f *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly f) { return f *= s; }

    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
        f.check_same(g);
        LaurentPoly r(f.n_);
        for (const auto& [e1, c1] : f.terms_)
            for (const auto& [e2, c2] : g.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
        return f.n_ == g.n_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const LaurentPoly& f, const LaurentPoly& g) { return !(f == g); }

    // Multiplication by c * x^shift.
    LaurentPoly shifted(const Weight& shift, const Rational& c = 1) const {
        LaurentPoly r(n_);
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, v * c);
        return r;
    }

    Rational eval(const std::vector<Rational>& y) const {
        check_point(y.size());
        for (const auto& v : y)
            if (v == 0) throw std::domain_error("evaluation at a point with a zero coordinate");
        PowerTable<Rational> table(y, *this);
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (int i = 0; i < n_; ++i) m *= table(i, e[static_cast<std::size_t>(i)]);
            total += m;
        }
        return total;
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& x) const {
        check_point(x.size());
        PowerTable<std::complex<double>> table(x, *this);
        std::complex<double> total = 0;
        for (const auto& [e, c] : terms_) {
            std::complex<double> m = c.get_d();
            for (int i = 0; i < n_; ++i) m *= table(i, e[static_cast<std::size_t>(i)]);
            total += m;
        }
        return total;
    }

    int max_abs_exponent() const {
        int m = 0;
        for (const auto& [e, c] : terms_)
            for (int v : e) m = std::max(m, std::abs(v));
        return m;
    }

    // Human-readable form, e.g. "x1^2*x2^-1 - 3/5*x1 + 1".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = abs(c);
            bool is_const = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
            if (first)
                out += (c < 0 ? "-" : "");
            else
                out += (c < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (int i = 0; i < n_; ++i) {
                int k = e[static_cast<std::size_t>(i)];
                if (k == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (k != 1) mono += "^" + std::to_string(k);
            }
            if (is_const)
                out += to_string(mag);
            else if (mag == 1)
                out += mono;
            else
                out += to_string(mag) + "*" + mono;
        }
        return out;
    }

private:
    template <class T>
    struct PowerTable {
        std::vector<int> lo;
        std::vector<std::vector<T>> pw;

        PowerTable(const std::vector<T>& y, const LaurentPoly& f) {
            const auto n = y.size();
            std::vector<int> mn(n, 0), mx(n, 0);
            for (const auto& [e, c] : f.terms_)
                for (std::size_t i = 0; i < n; ++i) {
                    mn[i] = std::min(mn[i], e[i]);
                    mx[i] = std::max(mx[i], e[i]);
                }
            lo = mn;
            pw.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                auto& row = pw[i];
                row.assign(static_cast<std::size_t>(mx[i] - mn[i] + 1), T(1));
                const int zero = -mn[i];
                T inv = T(1) / y[i];
                for (int k = 1; k <= mx[i]; ++k) row[zero + k] = row[zero + k - 1] * y[i];
                for (int k = 1; k <= -mn[i]; ++k) row[zero - k] = row[zero - k + 1] * inv;
            }
        }
        const T& operator()(int i, int k) const {
            return pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - lo[static_cast<std::size_t>(i)])];
        }
    };

    static void check_dim(int n) {
        if (n < 1) throw std::invalid_argument("Laurent polynomial dimension must be positive");
    }
    void check_same(const LaurentPoly& g) const {
        if (n_ != g.n_) throw std::invalid_argument("dimension mismatch between Laurent polynomials");
    }
    void check_point(std::size_t len) const {
        if (static_cast<int>(len) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
    }

    int n_ = 0;
    TermMap terms_;
};

inline LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
inline LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
inline Rational eval_at(const LaurentPoly& f, const std::vector<Rational>& y) { return f.eval(y); }

// f(q x1^-1, x2, ..., xn): x1^k becomes q^k x1^-k.
inline LaurentPoly act_s0(const LaurentPoly& f, const Rational& q) {
    if (q == 0) throw std::invalid_argument("q must be nonzero");
    LaurentPoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        Weight e2 = e;
        e2[0] = -e[0];
        r.add_term(e2, c * pow(q, e[0]));
    }
    return r;
}

// (sigma f)(x) = f(x^-1).
inline LaurentPoly invert_variables(const LaurentPoly& f) {
    LaurentPoly r(f.n());
    for (const auto& [e, c] : f.terms()) r.add_term(-e, c);
    return r;
}

}  // namespace koorn
