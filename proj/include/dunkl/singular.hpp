#pragma once

#include <optional>

#include "dunkl/jack.hpp"
#include "dunkl/operators.hpp"

namespace dunkl {

// Witness for kappa in K_1: n*kappa_0 + i/m + kappa_i is a nonpositive
// integer.
struct K1Witness {
    int n = 0;
    int i = 0;
    Rational value;
};

std::optional<K1Witness> in_K1(const ParamTuple& kappa, int N);

// K_0 membership: kappa_0 = -j/n - l for some l >= 0 and admissible (j, n).
// The admissible range is table driven: j_lo(n) <= j <= j_hi(n) with
// j_bound = base + coef*n, and 2 <= n <= N.  The shipped default follows the
// printed condition 2 <= j-1 <= n <= N literally; `corrected` uses
// 1 <= j <= n-1, which reproduces the known type-A singular set.  Either way
// the Gram corank oracle is the source of truth; predicate answers are
// advisory until oracle-confirmed.
struct K0Config {
    int j_lo_base = 3, j_lo_coef = 0;
    int j_hi_base = 1, j_hi_coef = 1;
    static K0Config literal() { return {3, 0, 1, 1}; }
    static K0Config corrected() { return {1, 0, -1, 1}; }
};

struct K0Witness {
    int j = 0;
    int n = 0;
    long l = 0;
};

std::optional<K0Witness> in_K0(const ParamTuple& kappa, int N, const K0Config& cfg = {});

// Corank of the Gram matrix of P_n for n = 1..up_to_degree, by fraction-free
// exact elimination.  A nonzero corank certifies a singular parameter.
std::vector<int> gram_corank_oracle(const OperatorContext& ctx, int up_to_degree);

// Exact kernel basis of p -> (T_1 p, ..., T_N p) on P_degree.
std::vector<Polynomial> radical_basis(const OperatorContext& ctx, int degree);

// Least degree <= bound at which the closed-form self-pairing of some
// x^alpha zeta_lambda (alpha standard, lambda a partition) vanishes, i.e.
// the degree at which the radical is predicted to appear.
std::optional<int> min_radical_degree(const OperatorContext& ctx, int bound);

struct SingularReport {
    ParamTuple kappa;
    int N = 1;
    bool k0_member = false;
    std::optional<K0Witness> k0_witness;
    bool k0_confirmed = false; // oracle saw a nonzero corank
    bool k1_member = false;
    std::optional<K1Witness> k1_witness;
    int oracle_degree_checked = 0;
    std::vector<int> oracle_corank_by_degree;
};

SingularReport singular_report(const OperatorContext& ctx, int oracle_degree,
                               const K0Config& cfg = {});
std::string singular_report_json(const SingularReport& r);

enum class ShiftKind { CyclicFull, CyclicP, Symmetric, Corollary };

// T_i(kappa)^m x^{t 1} g(y) = x^{t 1} T_i(kappa')^m g(y) for the full cyclic
// family (p = 1), kappa' = kappa with kappa_1..kappa_t incremented by 1.
bool verify_shift_cyclic_full(const OperatorContext& ctx, int t, const Polynomial& g_in_y);

// T_i(kappa)^{m/p} x^{(t+s m/p) 1} g = x^{t 1} T_i(kappa')^{m/p} x^{(s m/p) 1} g,
// kappa' = free tuple with kappa_1..kappa_t incremented by 1/p.
bool verify_shift_cyclic_p(const OperatorContext& ctx, int t, int s, const Polynomial& g_in_y);

// f(T(kappa)) a_delta(y) g(y) = a_delta(y) f(T(kappa')) g(y) for symmetric
// f, g in y, kappa' = (kappa_0 + 1, rest unchanged).
bool verify_shift_symmetric(const OperatorContext& ctx, const Polynomial& f_in_y,
                            const Polynomial& g_in_y);

// (pi p, pi q)_k = (pi, pi)_k (p, q)_{k+1} with pi = x^{(m/p-1) 1} a_delta(y)
// and p, q G-invariant; k+1 increments each hyperplane-orbit parameter by 1
// in the Section-2 normalization.
bool verify_shift_corollary(const OperatorContext& ctx, const Polynomial& p_inv,
                            const Polynomial& q_inv);

// The parameter tuple "kappa + 1" used by the corollary.
ParamTuple shift_params_plus_one(const OperatorContext& ctx);

// substitute T_i^m for y_i in the symmetric polynomial f and apply to h
Polynomial apply_y_operator(const OperatorContext& ctx, const Polynomial& f_in_y,
                            const Polynomial& h);

bool is_symmetric_in_y(const Polynomial& g_in_y);
bool is_invariant(const OperatorContext& ctx, const Polynomial& p);

} // namespace dunkl
