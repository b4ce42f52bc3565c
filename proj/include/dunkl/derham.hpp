#pragma once

#include "dunkl/operators.hpp"

namespace dunkl {

// Element of K^l = P (x) Lambda^l V*: a sparse map from (exponent, index
// subset) pairs to coefficients.  Subsets are kept strictly increasing
// (0-based); dx_i ^ dx_j = -dx_j ^ dx_i fixes the sign of the sorted form.
class DifferentialForm {
  public:
    using Key = std::pair<Composition, std::vector<int>>;
    using TermMap = std::map<Key, CycNumber>;

    DifferentialForm(int nvars, int conductor, int form_degree)
        : nvars_(nvars), conductor_(conductor), form_degree_(form_degree) {}

    static DifferentialForm from_polynomial(const Polynomial& p);

    int nvars() const { return nvars_; }
    int conductor() const { return conductor_; }
    int form_degree() const { return form_degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // polynomial degree of a (polynomially) homogeneous form; -1 when zero
    int poly_degree() const;

    // subset must be strictly increasing
    void add_term(const Composition& exp, const std::vector<int>& subset, const CycNumber& c);
    // sorts the subset, applying the wedge sign; drops repeated indices
    void add_term_unsorted(const Composition& exp, std::vector<int> subset, const CycNumber& c);

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm& operator+=(const DifferentialForm& o);
    DifferentialForm scale(const CycNumber& c) const;
    bool operator==(const DifferentialForm& o) const;
    bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

    // requires form_degree == 0
    Polynomial as_polynomial() const;

  private:
    int nvars_;
    int conductor_;
    int form_degree_;
    TermMap terms_;
};

// d(k): K^l_m -> K^{l+1}_{m-1}; on K^0 it is p -> sum_i (T_i p) dx_i,
// extended by d(k)(p (x) w) = d(k)(p) ^ w.
DifferentialForm d_k(const OperatorContext& ctx, const DifferentialForm& w);

// Koszul differential: K^l_m -> K^{l-1}_{m+1}.
DifferentialForm koszul(const DifferentialForm& w);

// E(k) = koszul d(k) + d(k) koszul; preserves the (l, m) bidegree.
DifferentialForm euler_form(const OperatorContext& ctx, const DifferentialForm& w);

// Diagonal action of a group element on a form.
DifferentialForm act_diagonal(const GroupElement& g, const DifferentialForm& w);
DifferentialForm apply_diagonal(const GroupAlgebraOp& op, const DifferentialForm& w);

// Degree-by-degree matrices of the intertwiner V(k) on the monomial basis
// of P_d, d = 0..max_degree; block d is square over compositions_of(d, N).
struct IntertwinerTable {
    int max_degree = 0;
    std::vector<QMat> blocks;
};

// Inductive build: V(p) = koszul(E(k)^{-1} V(d(0) p)), E(k) inverted by an
// exact solve on K^1_{d-1}.  Throws SingularParameter(d) when that block is
// not invertible.  shuffle_seed permutes internal processing order only; the
// returned table is canonical.
IntertwinerTable build_intertwiner(const OperatorContext& ctx, int max_degree,
                                   unsigned long shuffle_seed = 0);

Polynomial intertwiner_apply(const IntertwinerTable& table, const OperatorContext& ctx,
                             const Polynomial& p);

// One joint eigenvalue of z(k) = E(k) - E(0) on P_degree: an exact linear
// form in the free parameters (kappa_0, kappa_1..kappa_{m/p-1}) with its
// multiplicity.  All coefficients must be nonnegative integers.
struct ZSpectrumLine {
    std::vector<Rational> coeffs;
    int multiplicity = 0;
    bool operator==(const ZSpectrumLine& o) const = default;
};

std::vector<ZSpectrumLine> z_spectrum(const OperatorContext& ctx, int degree);

// Value of a spectrum line at a concrete parameter tuple.
Rational z_line_value(const ZSpectrumLine& line, const ParamTuple& kappa);

} // namespace dunkl
