#pragma once

#include <gmpxx.h>

#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

// Exact rational arithmetic is delegated to GMP.  Every value is kept in
// canonical form (reduced, positive denominator), so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivideByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a" or "a/b" with optional leading '-'.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError(0, "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError(0, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw DivideByZero();
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// (a)_n = a (a+1) ... (a+n-1)
inline Rational rising_factorial(const Rational& a, long n) {
    Rational r = 1;
    Rational v = a;
    for (long k = 0; k < n; ++k) {
        r *= v;
        v += 1;
    }
    return r;
}

inline Rational pow_rational(const Rational& a, long e) {
    Rational r = 1;
    for (long k = 0; k < e; ++k) r *= a;
    return r;
}

inline Integer factorial(long n) {
    Integer r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace dunkl
