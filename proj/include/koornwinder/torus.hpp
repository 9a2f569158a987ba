#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "koornwinder.hpp"

namespace koorn {

using Complex = std::complex<double>;
using ComplexPoint = std::vector<Complex>;

struct GridSpec {
    int N = 64;       // points per torus dimension
    int M = 40;       // factors kept in each infinite q-shifted factorial
    double rho = 0.25;  // residue radius as a fraction of the gap to the nearest other pole
    int K = 48;       // points per residue circle

    void validate() const {
        if (N < 16 || (N & (N - 1)) != 0) throw std::invalid_argument("N must be a power of two >= 16");
        if (M < 20) throw std::invalid_argument("M must be at least 20");
        if (!(rho > 0 && rho < 1)) throw std::invalid_argument("residue radius fraction must lie in (0, 1)");
        if (K < 8) throw std::invalid_argument("residue circles need at least 8 points");
    }
};

// Smallest power of two N >= 64 for which the trapezoid error, which decays like r^N with r the
// largest modulus among a, b, c, d and t^2, falls below 1e-15 even after a degree-16 product.
inline int auto_grid_size(const ParamSet& p) {
    double r = std::abs(to_double(p.mult.t)) * std::abs(to_double(p.mult.t));
    for (const Rational& v : {p.a(), p.b(), p.c(), p.d()}) r = std::max(r, std::abs(to_double(v)));
    int N = 64;
    while (N < 4096 && std::pow(r, N - 16) > 1e-15) N *= 2;
    return N;
}

struct DoubleParams {
    double q, t, a, b, c, d;
    explicit DoubleParams(const ParamSet& p)
        : q(to_double(p.q())),
          t(to_double(p.mult.t)),
          a(to_double(p.a())),
          b(to_double(p.b())),
          c(to_double(p.c())),
          d(to_double(p.d())) {}
};

inline Complex qpoch_inf_c(Complex y, double q, int M) { return qpoch_inf<Complex>(y, q, M); }

// The W-invariant weight: a product of infinite q-shifted factorials over pairs and single coordinates.
inline Complex delta_plus(const ComplexPoint& x, const ParamSet& p, int M) {
    const DoubleParams d(p);
    const double t2 = d.t * d.t;
    const std::size_t n = x.size();
    Complex num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (Complex y : {x[i] * x[j], x[i] / x[j], x[j] / x[i], 1.0 / (x[i] * x[j])}) {
                num *= qpoch_inf_c(y, d.q, M);
                den *= qpoch_inf_c(t2 * y, d.q, M);
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        const Complex xi = x[i], xinv = 1.0 / x[i];
        num *= qpoch_inf_c(xi * xi, d.q, M) * qpoch_inf_c(xinv * xinv, d.q, M);
        for (double e : {d.a, d.b, d.c, d.d}) den *= qpoch_inf_c(e * xi, d.q, M) * qpoch_inf_c(e * xinv, d.q, M);
    }
    if (std::abs(den) < 1e-13 * std::max(1.0, std::abs(num)))
        throw GenericityError("weight function evaluated at a pole");
    return num / den;
}

// The non-symmetric weight C * Delta_+, written so that no factor has a pole on the torus.
inline Complex delta(const ComplexPoint& x, const ParamSet& p, int M) {
    const DoubleParams d(p);
    const double t2 = d.t * d.t;
    const std::size_t n = x.size();
    Complex num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (Complex y : {x[i] * x[j], x[i] / x[j], d.q / (x[i] * x[j]), d.q * x[j] / x[i]}) {
                num *= qpoch_inf_c(y, d.q, M);
                den *= qpoch_inf_c(t2 * y, d.q, M);
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        const Complex xi = x[i], xinv = 1.0 / x[i];
        num *= qpoch_inf_c(xi * xi, d.q, M) * qpoch_inf_c(d.q * xinv * xinv, d.q, M);
        for (double e : {d.a, d.b, d.c, d.d}) den *= qpoch_inf_c(e * xi, d.q, M);
        for (double e : {d.a, d.b, d.q * d.c, d.q * d.d}) den *= qpoch_inf_c(e * xinv, d.q, M);
    }
    if (std::abs(den) < 1e-13 * std::max(1.0, std::abs(num)))
        throw GenericityError("weight function evaluated at a pole");
    return num / den;
}

// v_alpha at a complex point for a finite root alpha.
inline Complex v_complex(const Weight& alpha, const ComplexPoint& x, const ParamSet& p) {
    const AffineRoot beta = finite_root(alpha);
    Complex xa = 1;
    for (std::size_t i = 0; i < x.size(); ++i) xa *= std::pow(x[i], alpha[i]);
    const double tb = to_double(p.mult.at(beta));
    if (grad_kind(alpha) == GradKind::Long) {
        const double th = to_double(p.mult.half_at(beta));
        Complex xh = 1;
        for (std::size_t i = 0; i < x.size(); ++i) xh *= std::pow(x[i], alpha[i] / 2);
        return (1.0 - tb * th * xh) * (1.0 + tb / th * xh) / (1.0 - xa);
    }
    return (1.0 - tb * tb * xa) / (1.0 - xa);
}

inline Complex C_complex(const ComplexPoint& x, const ParamSet& p) {
    Complex r = 1;
    for (const auto& a : positive_roots(static_cast<int>(x.size()))) r *= v_complex(-a, x, p);
    return r;
}

// ---------------------------------------------------------------------------
// Trapezoid rule on the torus.

enum class WeightKind { None, Plain, Plus };

class TorusGrid {
public:
    TorusGrid(int n, int N) : n_(n), N_(N) {
        long total = 1;
        for (int i = 0; i < n; ++i) total *= N;
        total_ = static_cast<std::size_t>(total);
        roots_.resize(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) roots_[static_cast<std::size_t>(k)] = std::polar(1.0, 2 * std::numbers::pi * k / N);
    }

    int n() const { return n_; }
    int N() const { return N_; }
    std::size_t size() const { return total_; }

    std::vector<int> index(std::size_t flat) const {
        std::vector<int> idx(static_cast<std::size_t>(n_));
        for (int i = n_ - 1; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(N_));
            flat /= static_cast<std::size_t>(N_);
        }
        return idx;
    }

    ComplexPoint point(std::size_t flat) const {
        ComplexPoint x;
        for (int k : index(flat)) x.push_back(roots_[static_cast<std::size_t>(k)]);
        return x;
    }

    // Values of f at every grid point; sign -1 evaluates at the inverted point.
    std::vector<Complex> values(const LaurentPoly& f, int sign = 1) const {
        std::vector<Complex> out(total_, Complex(0));
        std::vector<std::pair<std::vector<long>, Complex>> terms;
        for (const auto& [e, c] : f.terms()) {
            std::vector<long> ex(e.begin(), e.end());
            terms.push_back({ex, Complex(to_double(c), 0)});
        }
        for (std::size_t flat = 0; flat < total_; ++flat) {
            const auto idx = index(flat);
            Complex s = 0;
            for (const auto& [ex, c] : terms) {
                long phase = 0;
                for (std::size_t i = 0; i < ex.size(); ++i) phase += sign * ex[i] * idx[i];
                phase %= N_;
                if (phase < 0) phase += N_;
                s += c * roots_[static_cast<std::size_t>(phase)];
            }
            out[flat] = s;
        }
        return out;
    }

    const std::vector<Complex>& weight(WeightKind kind, const ParamSet& p, int M) const {
        const std::string key = std::to_string(static_cast<int>(kind)) + "|" + params_key(p) + "|" + std::to_string(M);
        std::lock_guard<std::mutex> lock(*mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<Complex> w(total_, Complex(1));
        if (kind != WeightKind::None)
            for (std::size_t flat = 0; flat < total_; ++flat) {
                const ComplexPoint x = point(flat);
                w[flat] = kind == WeightKind::Plain ? delta(x, p, M) : delta_plus(x, p, M);
            }
        return cache_.emplace(key, std::move(w)).first->second;
    }

    // Mean over the grid of f(x) g(x^-1) weight(x), summed in a fixed order.
    Complex pairing(const LaurentPoly& f, const LaurentPoly& g, WeightKind kind, const ParamSet& p, int M) const {
        return pairing_values(values(f, 1), values(g, -1), kind, p, M);
    }

    // The same mean from precomputed values of f and of g at the inverted points.
    Complex pairing_values(const std::vector<Complex>& fv, const std::vector<Complex>& gv_inv, WeightKind kind,
                           const ParamSet& p, int M) const {
        const auto& w = weight(kind, p, M);
        Complex s = 0;
        for (std::size_t k = 0; k < total_; ++k) s += fv[k] * gv_inv[k] * w[k];
        return s / static_cast<double>(total_);
    }

private:
    int n_, N_;
    std::size_t total_;
    std::vector<Complex> roots_;
    mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
    mutable std::map<std::string, std::vector<Complex>> cache_;
};

inline Complex pairing(const LaurentPoly& f, const LaurentPoly& g, WeightKind kind, const ParamSet& p, const GridSpec& grid) {
    TorusGrid t(f.n(), grid.N);
    return t.pairing(f, g, kind, p, grid.M);
}

inline double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// ---------------------------------------------------------------------------
// Iterated residues.

namespace detail {

// Points where a denominator factor of the weights vanishes in coordinate j, the others held fixed.
inline std::vector<Complex> singular_points(std::size_t j, const ComplexPoint& centers, const ParamSet& p, int M) {
    const DoubleParams d(p);
    const double t2 = d.t * d.t;
    std::vector<Complex> pts{Complex(0)};
    for (int k = 0; k <= M; ++k) {
        const double qk = std::pow(d.q, k);
        for (double e : {d.a, d.b, d.c, d.d}) {
            pts.push_back(1.0 / (e * qk));
            pts.push_back(e * qk);
        }
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (i == j) continue;
            const Complex xi = centers[i];
            for (double s : {t2 * qk, 1.0 / (t2 * qk)}) {
                pts.push_back(s * xi);
                pts.push_back(s / xi);
            }
        }
    }
    return pts;
}

}  // namespace detail

// (-1)^{n_neg} Res_{x_{u(1)}} ... Res_{x_{u(n)}} of weight(x) / (x_1 ... x_n) at x = centers, where
// order lists the coordinates from outermost to innermost.
inline Complex iterated_residue(const ComplexPoint& centers, const std::vector<std::size_t>& order, WeightKind kind,
                                const ParamSet& p, const GridSpec& grid) {
    const std::size_t n = centers.size();
    std::vector<double> radius(n);
    for (std::size_t level = 0; level < n; ++level) {
        const std::size_t j = order[level];
        double gap = std::numeric_limits<double>::infinity();
        for (const Complex& s : detail::singular_points(j, centers, p, grid.M)) {
            const double dist = std::abs(s - centers[j]);
            if (dist > 1e-9 * std::abs(centers[j])) gap = std::min(gap, dist);
        }
        for (std::size_t outer = 0; outer < level; ++outer) {
            const std::size_t i = order[outer];
            gap = std::min(gap, std::abs(centers[j] / centers[i]) * radius[i]);
        }
        radius[j] = grid.rho * gap;
    }
    ComplexPoint x = centers;
    std::vector<Complex> circle(static_cast<std::size_t>(grid.K));
    for (int k = 0; k < grid.K; ++k) circle[static_cast<std::size_t>(k)] = std::polar(1.0, 2 * std::numbers::pi * k / grid.K);
    auto rec = [&](auto&& self, std::size_t level) -> Complex {
        if (level == n) {
            Complex prod = 1;
            for (const auto& v : x) prod *= v;
            const Complex w = kind == WeightKind::Plus ? delta_plus(x, p, grid.M) : delta(x, p, grid.M);
            return w / prod;
        }
        const std::size_t j = order[level];
        Complex s = 0;
        for (const Complex& z : circle) {
            const Complex dz = radius[j] * z;
            x[j] = centers[j] + dz;
            s += self(self, level + 1) * dz;
        }
        x[j] = centers[j];
        return s / static_cast<double>(grid.K);
    };
    return rec(rec, 0);
}

inline ComplexPoint to_complex(const SpectrumPoint& y) {
    ComplexPoint c;
    for (const auto& v : y) c.push_back(Complex(to_double(v), 0));
    return c;
}

// w~_+(gamma_mu^-1) for dominant mu: residues of Delta_+(x; t~)/(x_1 ... x_n), x_n innermost.
inline Complex residue_weight_plus(const Weight& mu, const ParamSet& p, const GridSpec& grid) {
    if (!is_dominant(mu)) throw std::invalid_argument("symmetric residue weight needs a dominant weight");
    std::vector<std::size_t> order(mu.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return iterated_residue(to_complex(inverse_point(gamma(mu, p))), order, WeightKind::Plus, p.dual(), grid);
}

// w~(gamma_lambda^-1): residues of Delta(x; t~)/(x_1 ... x_n) in the order given by the permutation part of w_lambda.
inline Complex residue_weight(const Weight& lam, const ParamSet& p, const GridSpec& grid) {
    const SignedPermutation w = w_lambda(lam);
    std::vector<std::size_t> order(lam.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::size_t>(w.perm()[i]);
    int negatives = 0;
    for (int v : lam)
        if (v < 0) ++negatives;
    Complex r = iterated_residue(to_complex(inverse_point(gamma(lam, p))), order, WeightKind::Plain, p.dual(), grid);
    return negatives % 2 ? -r : r;
}

// ---------------------------------------------------------------------------
// Reports.

struct QuadTolerances {
    double abs_zero = 1e-8;  // zero quantities, relative to |<1,1>|
    double rel = 1e-6;       // ratios
    double ct = 1e-8;        // constant term against the infinite product
    double K = 1e-10;        // <1,1> / <1,1>_+ against K / |W|
};

inline long weyl_order(int n) {
    long r = 1;
    for (int i = 1; i <= n; ++i) r *= 2 * i;
    return r;
}

// <E(gamma_lambda), E'(gamma_lambda^-1)> / <1,1> by quadrature.
inline Complex quadrature_norm_ratio_ns(const Weight& lam, const ParamSet& p, const GridSpec& grid) {
    p.validate_for_quadrature();
    const int n = static_cast<int>(lam.size());
    TorusGrid torus(n, grid.N);
    const LaurentPoly one(n, Rational(1));
    const Complex c11 = torus.pairing(one, one, WeightKind::Plain, p, grid.M);
    return torus.pairing(normalize_E(lam, p).poly, normalize_E(lam, p.inverse()).poly, WeightKind::Plain, p, grid.M) / c11;
}

// <E+(gamma_lambda), E+(gamma_lambda)>_+ / <1,1>_+ by quadrature.
inline Complex quadrature_norm_ratio_sym(const Weight& lam, const ParamSet& p, const GridSpec& grid) {
    p.validate_for_quadrature();
    const int n = static_cast<int>(lam.size());
    TorusGrid torus(n, grid.N);
    const LaurentPoly one(n, Rational(1));
    const LaurentPoly f = normalize_Eplus(lam, p).poly;
    return torus.pairing(f, f, WeightKind::Plus, p, grid.M) / torus.pairing(one, one, WeightKind::Plus, p, grid.M);
}

// <1,1>_+ / |W| by quadrature.
inline Complex quadrature_constant_term(int n, const ParamSet& p, const GridSpec& grid) {
    p.validate_for_quadrature();
    TorusGrid torus(n, grid.N);
    const LaurentPoly one(n, Rational(1));
    return torus.pairing(one, one, WeightKind::Plus, p, grid.M) / static_cast<double>(weyl_order(n));
}

// Off-diagonal pairings vanish and diagonal ratios match the norm formulas.
inline Report biorthogonality_check(const std::vector<Weight>& lams, const ParamSet& p, const GridSpec& grid,
                                    const QuadTolerances& tol = {}) {
    p.validate_for_quadrature();
    const int n = static_cast<int>(lams.front().size());
    Report r;
    r.suite = "biorthogonality";
    TorusGrid torus(n, grid.N);
    const LaurentPoly one(n, Rational(1));
    const Complex c11 = torus.pairing(one, one, WeightKind::Plain, p, grid.M);
    const Complex c11p = torus.pairing(one, one, WeightKind::Plus, p, grid.M);
    const ParamSet ip = p.inverse();
    std::vector<std::vector<Complex>> E, Ep;
    for (const auto& l : lams) {
        E.push_back(torus.values(normalize_E(l, p).poly, 1));
        Ep.push_back(torus.values(normalize_E(l, ip).poly, -1));
    }
    double off = 0;
    for (std::size_t i = 0; i < lams.size(); ++i)
        for (std::size_t j = 0; j < lams.size(); ++j) {
            const Complex v = torus.pairing_values(E[i], Ep[j], WeightKind::Plain, p, grid.M);
            if (i != j) {
                off = std::max(off, std::abs(v) / std::abs(c11));
            } else {
                const Rational want = norm_ratio_ns(lams[i], p);
                r.numeric("norm " + weight_to_string(lams[i]), "<E(gamma), E'(gamma^-1)> / <1,1> = w~(gamma_0^-1) / w~(gamma^-1)",
                          rel_err(v / c11, Complex(to_double(want), 0)), tol.rel, "formula " + to_string(want));
            }
        }
    r.numeric("bi-orthogonality", "<E(gamma_lambda), E'(gamma_mu^-1)> = 0 for lambda != mu", off, tol.abs_zero,
              std::to_string(lams.size()) + " weights");

    std::vector<Weight> dom;
    for (const auto& l : lams)
        if (is_dominant(l)) dom.push_back(l);
    std::vector<std::vector<Complex>> Eplus, Eplus_inv;
    for (const auto& l : dom) {
        const LaurentPoly f = normalize_Eplus(l, p).poly;
        Eplus.push_back(torus.values(f, 1));
        Eplus_inv.push_back(torus.values(f, -1));
    }
    double offp = 0;
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j) {
            const Complex v = torus.pairing_values(Eplus[i], Eplus_inv[j], WeightKind::Plus, p, grid.M);
            if (i != j) {
                offp = std::max(offp, std::abs(v) / std::abs(c11p));
            } else {
                const Rational want = norm_ratio_sym(dom[i], p);
                r.numeric("symmetric norm " + weight_to_string(dom[i]), "<E+, E+>_+ / <1,1>_+ = explicit product",
                          rel_err(v / c11p, Complex(to_double(want), 0)), tol.rel, "formula " + to_string(want));
            }
        }
    r.numeric("orthogonality", "<E+(gamma_lambda), E+(gamma_mu)>_+ = 0 for lambda != mu", offp, tol.abs_zero,
              std::to_string(dom.size()) + " dominant weights");
    return r;
}

// Constant term against the infinite product, and the symmetric reduction constant K.
inline Report constant_term_check(int n, const ParamSet& p, const GridSpec& grid, const QuadTolerances& tol = {},
                                  std::uint64_t seed = 1) {
    p.validate_for_quadrature();
    Report r;
    r.suite = "constant-term";
    TorusGrid torus(n, grid.N);
    const LaurentPoly one(n, Rational(1));
    const Complex c11 = torus.pairing(one, one, WeightKind::Plain, p, grid.M);
    const Complex c11p = torus.pairing(one, one, WeightKind::Plus, p, grid.M);
    const double W = static_cast<double>(weyl_order(n));
    const double gus = gustafson_ct(p, n, grid.M);
    r.numeric("constant term", "<1,1>_+ / |W| = infinite product", rel_err(c11p / W, Complex(gus, 0)), tol.ct,
              "product " + std::to_string(gus));
    const double gus10 = gustafson_ct(p, n, grid.M + 10);
    r.numeric("product truncation", "truncation M vs M+10", std::abs(gus - gus10) / std::abs(gus10), 1e-12);

    const Rational K = K_const(p, n);
    r.numeric("symmetric reduction", "<1,1> = (K/|W|) <1,1>_+ with K = C(x_0^-1)",
              rel_err(c11 / c11p * W, Complex(to_double(K), 0)), tol.K, "K = " + to_string(K));

    // K as a sum over a coset space, exactly.
    Rational Ksum = 0;
    Weight e1 = unit_weight(n, 0);
    for (const auto& mu : weyl_orbit(e1)) Ksum += C_eval(inverse_point(x_point(mu, p)), p);
    r.exact("K over the orbit of e_1", "K = sum over W/W_lambda of C(x_{w lambda}^-1)", Ksum == K);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
    double sumerr = 0, linkerr = 0;
    for (int trial = 0; trial < 5; ++trial) {
        ComplexPoint x;
        for (int i = 0; i < n; ++i) x.push_back(std::polar(1.0, ang(rng)));
        Complex s = 0;
        for (const auto& w : weyl_group(n)) {
            ComplexPoint wx(static_cast<std::size_t>(n));
            // (w C)(x) = C(w^-1 x)
            SignedPermutation wi = w.inverse();
            for (int i = 0; i < n; ++i) {
                Complex v = x[static_cast<std::size_t>(i)];
                wx[static_cast<std::size_t>(wi.perm()[static_cast<std::size_t>(i)])] =
                    wi.signs()[static_cast<std::size_t>(i)] > 0 ? v : 1.0 / v;
            }
            s += C_complex(wx, p);
        }
        sumerr = std::max(sumerr, rel_err(s, Complex(to_double(K), 0)));
        linkerr = std::max(linkerr, rel_err(delta(x, p, grid.M), C_complex(x, p) * delta_plus(x, p, grid.M)));
    }
    r.numeric("sum of W-translates of C", "sum_w (w C)(x) = K at random torus points", sumerr, 1e-12);
    r.numeric("weight factorization", "Delta = C Delta_+ at random torus points", linkerr, 1e-12);

    // <f, g> = (K/|W|) <f, g>_+ for W-invariant f, g.
    const LaurentPoly f = monomial_symmetric(unit_weight(n, 0)) * Rational(2) + one;
    Weight e12 = zero_weight(n);
    e12[0] = 1;
    if (n > 1) e12[1] = 1;
    const LaurentPoly g = monomial_symmetric(e12) - monomial_symmetric(unit_weight(n, 0)) * frac(1, 3);
    const Complex lhs = torus.pairing(f, g, WeightKind::Plain, p, grid.M);
    const Complex rhs = torus.pairing(f, g, WeightKind::Plus, p, grid.M) * (to_double(K) / W);
    r.numeric("symmetric reduction, invariant pair", "<f,g> = (K/|W|) <f,g>_+ for W-invariant f, g",
              std::abs(lhs - rhs) / std::abs(c11), tol.abs_zero);
    return r;
}

// <T_i f, g> = <f, (T_i')^-1 g> with T_i' at the inverse parameters.
inline Report adjoint_check(int n, int i, const ParamSet& p, const GridSpec& grid, int trials, std::uint64_t seed,
                            const QuadTolerances& tol = {}) {
    p.validate_for_quadrature();
    Report r;
    r.suite = "adjoint";
    TorusGrid torus(n, grid.N);
    const ParamSet ip = p.inverse();
    const LaurentPoly one(n, Rational(1));
    const double scale = std::abs(torus.pairing(one, one, WeightKind::Plain, p, grid.M));
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    double worst = 0;
    std::vector<std::pair<LaurentPoly, LaurentPoly>> cases{{one, one}};
    cases.push_back({LaurentPoly::monomial(unit_weight(n, 0)), LaurentPoly::monomial(unit_weight(n, n - 1))});
    for (int k = 0; k < trials; ++k) cases.push_back({random_laurent(n, rng, 2, 3), random_laurent(n, rng, 2, 3)});
    for (const auto& [f, g] : cases) {
        const Complex lhs = torus.pairing(apply_Ti(i, f, p), g, WeightKind::Plain, p, grid.M);
        const Complex rhs = torus.pairing(f, apply_Ti_inv(i, g, ip), WeightKind::Plain, p, grid.M);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max({scale, std::abs(lhs), std::abs(rhs)}));
    }
    r.numeric("adjoint T_" + std::to_string(i), "<T_i f, g> = <f, (T_i')^-1 g>", worst, tol.abs_zero,
              std::to_string(cases.size()) + " pairs");
    return r;
}

// Residue weights against the closed-form ratios, the C-factorization and the s_0 pairing.
inline Report residue_check(const std::vector<Weight>& lams, const ParamSet& p, const GridSpec& grid,
                            const QuadTolerances& tol = {}) {
    p.validate_for_quadrature();
    const int n = static_cast<int>(lams.front().size());
    Report r;
    r.suite = "residues";
    const ParamSet d = p.dual();
    const Weight zero = zero_weight(n);
    const Complex wp0 = residue_weight_plus(zero, p, grid);
    const Complex w0 = residue_weight(zero, p, grid);
    for (const auto& lam : lams) {
        const std::string tag = weight_to_string(lam);
        const Weight plus = dominant(lam);
        const Complex wp = residue_weight_plus(plus, p, grid);
        const Complex w = residue_weight(lam, p, grid);
        if (lam == plus)
            r.numeric("symmetric weight ratio " + tag, "w~_+(gamma_0^-1) / w~_+(gamma_lambda^-1) = explicit norm product",
                      rel_err(wp0 / wp, Complex(to_double(norm_ratio_sym(plus, p)), 0)), tol.rel);
        const Rational c = C_eval(inverse_point(gamma(lam, p)), d);
        r.numeric("weight factorization " + tag, "w~(gamma_lambda^-1) = C(gamma_lambda^-1; t~) w~_+(gamma_{lambda+}^-1)",
                  rel_err(w / wp, Complex(to_double(c), 0)), tol.rel);
        r.numeric("weight ratio " + tag, "w~(gamma_0^-1) / w~(gamma_lambda^-1) = norm_ratio_ns",
                  rel_err(w0 / w, Complex(to_double(norm_ratio_ns(lam, p)), 0)), tol.rel);
    }
    // v~_{a_0}(gamma^-1) w~(gamma^-1) is unchanged under lambda -> s_0.lambda.
    const Weight moved = dot_simple(0, zero);
    const AffineRoot a0 = simple_root(0, n);
    const Complex lhs = to_double(v_eval(a0, inverse_point(gamma(zero, p)), d)) * w0;
    const Complex rhs = to_double(v_eval(a0, inverse_point(gamma(moved, p)), d)) * residue_weight(moved, p, grid);
    r.numeric("s_0 pairing", "v~_{a_0}(gamma^-1) w~(gamma^-1) agrees at lambda = 0 and s_0.0", rel_err(lhs, rhs), tol.rel);
    return r;
}

// G(F(E(gamma_lambda))) = k E(gamma_lambda) with k = w~(gamma_0^-1) <1,1>.
inline Report transform_roundtrip(const std::vector<Weight>& lams, const ParamSet& p, const GridSpec& grid,
                                  const QuadTolerances& tol = {}) {
    p.validate_for_quadrature();
    const int n = static_cast<int>(lams.front().size());
    Report r;
    r.suite = "transform";
    TorusGrid torus(n, grid.N);
    const ParamSet ip = p.inverse();
    const LaurentPoly one(n, Rational(1));
    const Complex c11 = torus.pairing(one, one, WeightKind::Plain, p, grid.M);
    const Complex c11p = torus.pairing(one, one, WeightKind::Plus, p, grid.M);
    const Weight zero = zero_weight(n);
    const Complex k = residue_weight(zero, p, grid) * c11;
    const double W = static_cast<double>(weyl_order(n));
    const Complex k_chain = to_double(K_const(p, n) * K_const(p.dual(), n)) / W * c11p * residue_weight_plus(zero, p, grid);
    r.numeric("transform constant", "k = w~(gamma_0^-1) <1,1> = (K K~ / |W|) <1,1>_+ w~_+(gamma_0^-1)", rel_err(k, k_chain),
              tol.rel);

    std::vector<LaurentPoly> E;
    std::vector<std::vector<Complex>> Ev, Epv;
    std::vector<Complex> wts;
    for (const auto& l : lams) {
        E.push_back(normalize_E(l, p).poly);
        Ev.push_back(torus.values(E.back(), 1));
        Epv.push_back(torus.values(normalize_E(l, ip).poly, -1));
        wts.push_back(residue_weight(l, p, grid));
    }
    for (std::size_t a = 0; a < lams.size(); ++a) {
        std::map<Weight, Complex> image;
        for (std::size_t b = 0; b < lams.size(); ++b) {
            const Complex coeff = torus.pairing_values(Ev[a], Epv[b], WeightKind::Plain, p, grid.M) * wts[b];
            for (const auto& [e, c] : E[b].terms()) image[e] += coeff * to_double(c);
        }
        double err = 0, size = 0;
        for (const auto& [e, c] : E[a].terms()) {
            image[e] -= k * to_double(c);
            size = std::max(size, std::abs(k * to_double(c)));
        }
        for (const auto& [e, v] : image) err = std::max(err, std::abs(v));
        r.numeric("roundtrip " + weight_to_string(lams[a]), "G(F(E(gamma_lambda))) = k E(gamma_lambda)", err / size, tol.rel);
    }
    return r;
}

}  // namespace koorn
