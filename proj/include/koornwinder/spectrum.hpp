#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "params.hpp"

namespace koorn {

// Raised when a specialization of the parameters hits one of the
// degeneracies excluded by genericity: colliding spectra, a pole of a
// rational factor, or a vanishing normalization.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point of (Q^*)^n at which Laurent polynomials are evaluated; gamma_lambda and x_0 are of this kind.
using SpectrumPoint = std::vector<Rational>;

inline SpectrumPoint inverse_point(const SpectrumPoint& y) {
    SpectrumPoint r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = inverse(y[i]);
    return r;
}

// y^{grad + (k/2) delta} = qh^k * prod_i y_i^{grad_i}.
inline Rational point_power(const SpectrumPoint& y, const AffineRoot& b, const Rational& qh) {
    Rational v = pow(qh, b.half_delta);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (b.grad[i] != 0) v *= pow(y[i], b.grad[i]);
    return v;
}

inline Rational point_power(const SpectrumPoint& y, const Weight& e) {
    Rational v = 1;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (e[i] != 0) v *= pow(y[i], e[i]);
    return v;
}

// gamma_lambda = (t0 tn)^{rho_l(lambda)} t^{rho_m(lambda)} q^lambda, componentwise.
inline SpectrumPoint gamma(const Weight& lam, const ParamSet& p) {
    RhoVectors rho = rho_vectors(lam);
    const Rational t0tn = p.mult.t0 * p.mult.tn;
    const Rational q = p.q();
    SpectrumPoint g(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i)
        g[i] = pow(t0tn, rho.rho_l[i]) * pow(p.mult.t, rho.rho_m[i]) * pow(q, lam[i]);
    return g;
}

// x_0 = gamma_0 at the dual multiplicities.
inline SpectrumPoint x0(const ParamSet& p, int n) { return gamma(zero_weight(n), p.dual()); }

// x_lambda = gamma_lambda at the dual multiplicities.
inline SpectrumPoint x_point(const Weight& lam, const ParamSet& p) { return gamma(lam, p.dual()); }

// m_{e_1}(y) = sum_i (y_i + y_i^-1).
inline Rational m_e1(const SpectrumPoint& y) {
    Rational s = 0;
    for (const auto& v : y) s += v + inverse(v);
    return s;
}

}  // namespace koorn
