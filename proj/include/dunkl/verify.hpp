#pragma once

#include <string>
#include <vector>

#include "dunkl/derham.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/sampling.hpp"
#include "dunkl/singular.hpp"

namespace dunkl {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample payload, re-runnable inputs
};

struct SuiteReport {
    std::string suite;
    // Identity checks are polynomial in kappa; this is the recorded degree
    // bound, and the number of sampled tuples always exceeds it.
    int kappa_degree_bound = 0;
    std::vector<CheckItem> items;

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "") {
        items.push_back({std::move(name), ok, std::move(detail)});
    }
};

std::string describe_params(const ParamTuple& k);

// T_i T_j = T_j T_i on every monomial of degree <= degree.
SuiteReport suite_commutativity(int m, int p, int N, int degree,
                                const std::vector<ParamTuple>& kappas);

// Hermiticity, contravariance, U self-adjointness, group invariance, parity
// orthogonality, and positivity of Gram minors at nonnegative parameters.
SuiteReport suite_hermiticity(int m, int p, int N, int degree,
                              const std::vector<ParamTuple>& kappas, unsigned long seed);

// Brute-force pairing of x^alpha zeta_gamma against the closed-form norm for
// every standard alpha, every gamma, |alpha| + m|gamma| <= bound; plus the
// E_+/E_- ratio, skew-invariant norm and eigenfunction orthogonality.
SuiteReport suite_norms(int m, int p, int N, int bound, const std::vector<ParamTuple>& kappas);

// U_{w(i)} eigenvalue equations for all parity types (standard and not, via
// admissible w), |alpha| <= 2(m-1), |gamma| <= gamma_bound.
SuiteReport suite_eigenfunctions(int m, int p, int N, int gamma_bound,
                                 const std::vector<ParamTuple>& kappas);

// d(k)^2 = 0, koszul^2 = 0, and koszul d + d koszul = E(0) + z(k) with the
// z-part applied independently through the group algebra.
SuiteReport suite_derham(int m, int p, int N, int d2_degree, int euler_degree,
                         const std::vector<ParamTuple>& kappas);

// Intertwiner build: T_i V = V d_i, identity at kappa = 0, basis-order
// independence, invertible blocks, and singular-parameter failure at a K_1
// witness at the predicted degree.
SuiteReport suite_intertwiner(int m, int p, int N, int max_degree,
                              const std::vector<ParamTuple>& kappas);

// Gram corank oracle against the K_1 predicate, radical bases, K_0 modes.
SuiteReport suite_singular(int m, int p, int N, int oracle_degree, unsigned long seed);

// The four shift identities on randomized admissible inputs.
SuiteReport suite_shifts(int m, int p, int N, const std::vector<ParamTuple>& kappas,
                         unsigned long seed);

// Operator evaluation of (f, f)_k against the closed form for the
// skew-invariant x^{t1} prod (x_i^m - x_j^m), every t.
SuiteReport suite_hanlon(int m, int p, int N, const std::vector<ParamTuple>& kappas);

// z(k) spectrum integrality: nonnegative integer eigenvalues at unit tuples,
// zero form exactly on the invariants (Reynolds-operator oracle).
SuiteReport suite_zspectrum(int m, int p, int N, int max_degree);

} // namespace dunkl
