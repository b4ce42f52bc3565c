#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunkl/composition.hpp"
#include "dunkl/cyclotomic.hpp"

namespace dunkl {

// Sparse multivariate polynomial over Q(eta).  Term map keys are exponent
// vectors ordered lexicographically, which fixes the iteration order used by
// every serializer.  No zero coefficient is ever stored.
class Polynomial {
  public:
    using TermMap = std::map<Composition, CycNumber>;

    Polynomial() : nvars_(0), conductor_(1) {}
    Polynomial(int nvars, int conductor) : nvars_(nvars), conductor_(conductor) {}

    static Polynomial zero(int nvars, int conductor) { return Polynomial(nvars, conductor); }
    static Polynomial constant(int nvars, int conductor, const Rational& c);
    static Polynomial monomial(int nvars, int conductor, const Composition& exp,
                               const CycNumber& coeff);
    static Polynomial monomial(int nvars, int conductor, const Composition& exp,
                               const Rational& coeff);
    // x_i^e, 1-based i
    static Polynomial x_power(int nvars, int conductor, int i, int e);

    int nvars() const { return nvars_; }
    int conductor() const { return conductor_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial (reporting only)
    int degree() const;
    bool is_homogeneous() const;

    CycNumber coefficient(const Composition& exp) const;
    void add_term(const Composition& exp, const CycNumber& coeff);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scale(const CycNumber& c) const;
    Polynomial scale(const Rational& r) const;

    // d/dx_i, 1-based i
    Polynomial partial_derivative(int i) const;
    CycNumber evaluate_at_zero() const;
    // p*(x): every coefficient conjugated, variables untouched
    Polynomial conjugate_coefficients() const;
    // degree -> homogeneous part, only nonzero parts present
    std::map<int, Polynomial> homogeneous_components() const;
    Polynomial homogeneous_part(int d) const;
    bool has_rational_coefficients() const;

    std::string to_text(const std::string& var = "x") const;
    std::string to_json() const;
    static Polynomial from_json(const std::string& text);

  private:
    int nvars_;
    int conductor_;
    TermMap terms_;

    void check_compatible(const Polynomial& o) const;
};

// Groups the terms of p by the residues mod m of their exponents.  The parts
// are pairwise disjoint in support and sum to p.
std::vector<std::pair<ParityType, Polynomial>> parity_split(const Polynomial& p, int m);

// Substitution y_i = x_i^m applied to a polynomial regarded as living in y.
Polynomial y_view(const Polynomial& g_in_y, int m);
// Inverse: requires every exponent divisible by m.
Polynomial x_to_y(const Polynomial& p_in_x, int m);

// Text grammar: term ('+'|'-' term)*, term = [coeff]['*'] (x<k>[^<e>])*.
Polynomial parse_polynomial(const std::string& text, int nvars, int conductor);

} // namespace dunkl
