#pragma once

#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

int euler_phi(int m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
// Computed by dividing t^m - 1 by the product of the proper-divisor factors.
std::vector<Integer> cyclotomic_polynomial(int m);

// An element of Q(eta), eta = exp(2*pi*i/m), stored as coordinates in the
// power basis 1, t, ..., t^{phi(m)-1} of Q[t]/(Phi_m).  Values are immutable
// in spirit: every operation returns a fresh, fully reduced element, and two
// elements are equal iff their conductors and coordinates agree.
class CycNumber {
  public:
    CycNumber() : m_(1), coords_(1, Rational(0)) {}
    CycNumber(int conductor, std::vector<Rational> coords);

    static CycNumber zero(int m);
    static CycNumber one(int m);
    static CycNumber from_rational(const Rational& r, int m);
    // eta^s (s may be any integer, taken mod m)
    static CycNumber root_of_unity_power(int m, long s);

    int conductor() const { return m_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    // true iff the value lies in Q (all coordinates above the constant vanish)
    bool is_rational() const;
    Rational rational_part() const; // constant coordinate
    // requires is_rational()
    Rational as_rational() const;

    CycNumber operator-() const;
    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber operator*(const Rational& r) const;

    CycNumber inverse() const; // throws DivideByZero on zero
    CycNumber operator/(const CycNumber& o) const { return *this * o.inverse(); }

    // The ring map eta -> eta^{m-1} = conj(eta).
    CycNumber conjugate() const;

    bool operator==(const CycNumber& o) const { return m_ == o.m_ && coords_ == o.coords_; }
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    std::vector<std::string> to_strings() const;
    static CycNumber from_strings(int m, const std::vector<std::string>& parts);
    // "a/b" when rational, otherwise a sum of eta powers, e.g. "1/2 + 3*eta^2"
    std::string to_display_string() const;

  private:
    int m_;
    std::vector<Rational> coords_;

    void check_same_field(const CycNumber& o) const;
};

inline CycNumber operator*(const Rational& r, const CycNumber& c) { return c * r; }

} // namespace dunkl
