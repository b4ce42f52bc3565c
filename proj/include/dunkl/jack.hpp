#pragma once

#include <map>
#include <mutex>

#include "dunkl/operators.hpp"

namespace dunkl {

// Workspace for the type-A machinery over y-variables: the p_mu basis and
// the nonsymmetric Jack eigenfunctions zeta_mu, both cached per composition.
// The conductor only fixes the coefficient field of the produced polynomials.
struct JackContext {
    int N;
    Rational kappa0;
    int conductor = 1;

    JackContext(int N_, Rational kappa0_, int conductor_ = 1)
        : N(N_), kappa0(std::move(kappa0_)), conductor(conductor_) {}

    mutable std::mutex mutex;
    mutable std::map<Composition, Polynomial> p_cache;
    mutable std::map<Composition, Polynomial> zeta_cache;
};

struct EigenData {
    Composition mu;
    std::vector<Rational> xi; // xi_i(mu) for i = 1..N
};

// xi_i(mu) = kappa_0 (N - #{j: mu_j > mu_i} - #{j: j<i, mu_j = mu_i}) + mu_i + 1
Rational xi(int N, const Rational& kappa0, const Composition& mu, int i);
EigenData eigen_data(int N, const Rational& kappa0, const Composition& mu);

// zeta poles can occur only at n*kappa0 + l = 0 with 1 <= n <= N, l >= 1,
// i.e. at negative rationals whose reduced denominator is at most N.
bool is_zeta_pole(const Rational& kappa0, int N);

// Coefficient of z^mu in prod_i {(1-y_i z_i)^{-1} prod_j (1-y_j z_i)^{-kappa0}}.
Polynomial p_basis(const JackContext& ctx, const Composition& mu);

// The unique simultaneous U_i^A eigenfunction with eigenvalues xi_i(mu) and
// p_mu-coordinate 1, found by an exact joint-eigenvector solve on the full
// homogeneous span of degree |mu|.
Polynomial zeta(const JackContext& ctx, const Composition& mu);

// E_eps(gamma) = prod {1 + eps*kappa0/(xi_j - xi_i) : i<j, gamma_i < gamma_j}
Rational e_factor(int N, const Rational& kappa0, const Composition& gamma, int sign);

// (t)_lambda = prod_i (t - (i-1) kappa0)_{lambda_i}
Rational pochhammer(int N, const Rational& kappa0, const Rational& t, const Composition& lambda);

// h(lambda, t) = prod over cells (i,j) of (lambda_i - j + t + kappa0 * leg)
Rational hook(const Composition& lambda, const Rational& t, const Rational& kappa0);

// chi_i(alpha)_j = 1 if alpha_j >= i else 0
Composition chi(int i, const ParityType& alpha);

// Closed-form value of the self-pairing of x^alpha zeta_gamma(y) for a
// standard parity type alpha.
Rational norm_closed_form(const OperatorContext& ctx, const ParityType& alpha,
                          const Composition& gamma);

// w x^alpha zeta_gamma(y) together with its U-eigenvalues.  The returned list
// is indexed by operator: result.second[j-1] is the eigenvalue of U_j.
// Requires alpha standard and w order preserving on equal-alpha blocks.
std::pair<Polynomial, std::vector<Rational>> eigenfunction(const OperatorContext& ctx,
                                                           const ParityType& alpha,
                                                           const Composition& gamma,
                                                           const Permutation& w);

// a_lambda = sum_w sign(w) w zeta_lambda, for strictly decreasing lambda;
// a_delta is the Vandermonde product in y.
Polynomial a_delta(const JackContext& ctx, const Composition& lambda);

// f = x^{t 1} prod_{i<j} (x_i^m - x_j^m) and the closed form of (f,f)_k.
std::pair<Rational, Polynomial> hanlon_norm(const OperatorContext& ctx, int t);

} // namespace dunkl
