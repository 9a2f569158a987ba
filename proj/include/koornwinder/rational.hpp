#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace koorn {

// GMP rationals are canonicalized after every arithmetic operation, so
// structural equality is value equality.
using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.erase(s.begin());
    while (!s.empty() && is_space(s.back())) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string& v, bool allow_sign) {
        if (v.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (v[0] == '-' || v[0] == '+')) i = 1;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (num[0] == '+') num.erase(num.begin());

    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// mpq_class(num, den) does not canonicalize on its own.
inline Rational frac(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational pow(const Rational& base, long k) {
    if (k < 0) {
        if (base == 0) throw std::domain_error("negative power of zero");
        Rational inv = 1 / base;
        return pow(inv, -k);
    }
    Rational result = 1, b = base;
    while (k > 0) {
        if (k & 1) result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

inline Rational inverse(const Rational& r) {
    if (r == 0) throw std::domain_error("inverse of zero");
    return 1 / Rational(r);
}

}  // namespace koorn
