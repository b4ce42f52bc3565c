#pragma once

#include <string>
#include <vector>

#include "dunkl/polynomial.hpp"

namespace dunkl {

// Element of G(m,p,N): a permutation matrix whose nonzero entries are powers
// of eta.  Acting on monomials: g x^a = eta^{<phases, a>} x^{w a}.
struct GroupElement {
    Permutation perm;        // 0-based images
    std::vector<int> phases; // entries mod m

    int n() const { return static_cast<int>(perm.size()); }
    bool operator==(const GroupElement& o) const = default;
    bool operator<(const GroupElement& o) const {
        return std::tie(perm, phases) < std::tie(o.perm, o.phases);
    }
    std::string to_text() const;
};

GroupElement identity_element(int N);
// (i, j) transposition, 1-based
GroupElement transposition(int N, int i, int j, int m);
// tau_i^s, 1-based i
GroupElement tau_power(int N, int i, long s, int m);
GroupElement from_permutation(const Permutation& w);

// (g * h) p = g (h p)
GroupElement compose(const GroupElement& g, const GroupElement& h, int m);
GroupElement inverse(const GroupElement& g, int m);
// sum of phases divisible by p
bool in_gmpn(const GroupElement& g, int m, int p);

Polynomial act(const GroupElement& g, const Polynomial& p);
// plain permutation action (all phases zero)
Polynomial act_perm(const Permutation& w, const Polynomial& p);

// All reflections of G(m,p,N): the m*N(N-1)/2 period-2 reflections
// tau_i^{-s}(i,j)tau_i^s ordered by (i,j,s), then the N*(m/p-1) diagonal ones
// tau_i^{sp} ordered by (i,s).
std::vector<GroupElement> reflections(int m, int p, int N);

// tau_i^{-s} (i,j) tau_i^s, 1-based
GroupElement period2_reflection(int N, int i, int j, long s, int m);

// Closure of the reflections under multiplication; |G| = m^N N!/p.
std::vector<GroupElement> enumerate_group(int m, int p, int N);

// pi_j(s): keeps the terms whose j-th exponent is congruent to s mod m.
Polynomial projection_pi(int m, int j, int s, const Polynomial& p);

// lambda_{rt} = sum_s tau_r^{-s}(r,t)tau_r^s; on a monomial this is
// m*(r,t)x^b when b_r = b_t mod m and 0 otherwise.
Polynomial lambda_apply(int m, int r, int t, const Polynomial& p);

struct GroupAlgebraOp {
    std::vector<std::pair<CycNumber, GroupElement>> terms;

    Polynomial apply(const Polynomial& p) const;
};

} // namespace dunkl
