#pragma once

#include <functional>

#include "dunkl/group.hpp"
#include "dunkl/linalg.hpp"
#include "dunkl/params.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

// Immutable bundle (m, p, N, kappa) shared by every operator below.
// Polynomials fed to these operators live in N variables over Q(eta_m).
struct OperatorContext {
    int m = 2;
    int p = 1;
    int N = 1;
    ParamTuple kappa;

    OperatorContext(int m_, int p_, int N_, ParamTuple kappa_);

    const Rational& kappa0() const { return kappa.kappa[0]; }
    Rational kappa_cyclic(long s) const { return kappa.kappa_cyclic(s); }
    Polynomial zero_poly() const { return Polynomial::zero(N, m); }
};

// The Dunkl operator T_i.  On a monomial: the partial derivative, plus
// m*kappa_0 times the residue-projected divided differences against each
// other variable, plus m*kappa_s x^a / x_i when a_i = s mod m with s != 0.
// Divided differences are evaluated by their closed summation, so the result
// is a polynomial by construction.
Polynomial apply_T(const OperatorContext& ctx, int i, const Polynomial& p);

// The type-A Dunkl operator on polynomials in y.
Polynomial apply_D(const Rational& kappa0, int i, const Polynomial& g);

// U_i = T_i x_i - kappa_0 sum_{j<i} lambda_{ij}
Polynomial apply_U(const OperatorContext& ctx, int i, const Polynomial& p);

// U_i^A = D_i y_i + kappa_0 - kappa_0 sum_{j<i} (i,j), acting in y.
Polynomial apply_UA(const Rational& kappa0, int i, const Polynomial& g);

// (p, q)_k = (p*(T) q)(0); non-homogeneous inputs are paired component-wise
// by degree (distinct degrees pair to zero).
CycNumber pairing(const OperatorContext& ctx, const Polynomial& p, const Polynomial& q);

// T^alpha q, the product of T_i^{alpha_i} applied right to left.
Polynomial apply_T_power(const OperatorContext& ctx, const Composition& alpha,
                         const Polynomial& q);

// Gram matrix of the pairing on the monomial basis of P_degree, basis ordered
// as gram_basis.
std::vector<std::vector<CycNumber>> gram_matrix(const OperatorContext& ctx, int degree);
std::vector<Composition> gram_basis(const OperatorContext& ctx, int degree);
// Same matrix with entries as rationals (entries of monomial Gram matrices
// are rational for rational kappa); throws if any entry is not rational.
QMat gram_matrix_q(const OperatorContext& ctx, int degree);

// E(k) = sum_i x_i T_i
Polynomial euler_apply(const OperatorContext& ctx, const Polynomial& p);

// (x_j T_i - T_i x_j) p, for i != j.
Polynomial commutator_xj_Ti(const OperatorContext& ctx, int i, int j, const Polynomial& p);

// kappa_0 sum_s eta^s tau_j^{-s} (i,j) tau_j^s, the group-algebra value of
// the commutator above.
GroupAlgebraOp commutator_group_op(const OperatorContext& ctx, int i, int j);

// z(k) = sum_H a_H(k) as an explicit group algebra element.
GroupAlgebraOp build_z(const OperatorContext& ctx);

// Matrix of a degree-preserving linear operator on a monomial basis; the
// entries must come out rational.
QMat operator_matrix_on_basis(const std::vector<Composition>& basis, int nvars, int conductor,
                              const std::function<Polynomial(const Polynomial&)>& op);

} // namespace dunkl
