#pragma once

#include <stdexcept>
#include <string>

#include "rootsys.hpp"

namespace koorn {

// The base parameters (q^{1/2}, t0, t0v, t, tn, tnv).  q itself is qh^2 so that
// half-delta monomials such as x^{a_0/2} = q^{1/2} x_1^{-1} stay rational.
struct ParamSet {
    Rational qh;
    MultiplicityData mult;

    Rational q() const { return qh * qh; }

    // Askey-Wilson parameters.
    Rational a() const { return mult.t0 * mult.t0v * qh; }
    Rational b() const { return -mult.t0 / mult.t0v * qh; }
    Rational c() const { return mult.tn * mult.tnv; }
    Rational d() const { return -mult.tn / mult.tnv; }

    ParamSet dual() const { return {qh, dual_mult(mult)}; }
    ParamSet inverse() const { return {koorn::inverse(qh), inverse_mult(mult)}; }
    ParamSet qshift() const { return {qh, qshift_mult(mult, qh)}; }

    // t_{a_i}.
    Rational ti(int i, int n) const { return mult.simple(i, n); }

    void validate() const {
        if (qh == 0 || qh == 1 || qh == -1) throw std::invalid_argument("q^{1/2} must avoid 0 and +-1");
        mult.validate();
    }

    // The regime in which the weight functions are analytic near the torus.
    void validate_for_quadrature() const {
        validate();
        auto modulus_below_one = [](const Rational& v) { return abs(v) < 1; };
        Rational q_ = q();
        if (!(q_ > 0 && q_ < 1)) throw std::invalid_argument("quadrature requires 0 < q < 1");
        if (!(mult.t > 0 && mult.t < 1)) throw std::invalid_argument("quadrature requires 0 < t < 1");
        for (const Rational& v : {a(), b(), c(), d()})
            if (!modulus_below_one(v))
                throw std::invalid_argument("quadrature requires |a|,|b|,|c|,|d| < 1 (got " + to_string(v) + ")");
    }

    friend bool operator==(const ParamSet& x, const ParamSet& y) { return x.qh == y.qh && x.mult == y.mult; }
};

inline ParamSet make_params(const std::string& qh, const std::string& t0, const std::string& t0v, const std::string& t,
                            const std::string& tn, const std::string& tnv) {
    ParamSet p{parse_rational(qh),
               {parse_rational(t0), parse_rational(t0v), parse_rational(t), parse_rational(tn), parse_rational(tnv)}};
    p.validate();
    return p;
}

inline ParamSet default_params() { return make_params("1/2", "3/5", "2/3", "1/2", "5/7", "4/5"); }

// Smaller |c|, |d| than the default set so that the trapezoid rule at N = 64
// resolves the weight function to double precision.
inline ParamSet quadrature_params() { return make_params("1/2", "3/5", "2/3", "1/2", "2/5", "4/5"); }

}  // namespace koorn
