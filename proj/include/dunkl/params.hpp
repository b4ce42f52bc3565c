#pragma once

#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// The parameter list kappa = (kappa_0, ..., kappa_{m-1}) for G(m,p,N).
// kappa_0 is attached to the period-2 reflections; kappa_1..kappa_{m-1} to
// the diagonal ones.  For p > 1 the tuple satisfies kappa_{s*m/p} = 0 and
// kappa_{t+s*m/p} = kappa_t (1 <= s <= p-1, 1 <= t <= m/p-1).
struct ParamTuple {
    int m = 1;
    int p = 1;
    std::vector<Rational> kappa; // length m

    const Rational& kappa0() const { return kappa[0]; }
    // kappa_s for any integer s, index taken mod m; kappa_0 in this indexing
    // is the (zero) trivial-character slot of the diagonal family.
    Rational kappa_cyclic(long s) const {
        long r = s % m;
        if (r < 0) r += m;
        return r == 0 ? Rational(0) : kappa[r];
    }

    // kappa_0 followed by the free cyclic values kappa_1..kappa_{m/p-1}
    std::vector<Rational> free_values() const {
        std::vector<Rational> out;
        out.push_back(kappa[0]);
        for (int t = 1; t <= m / p - 1; ++t) out.push_back(kappa[t]);
        return out;
    }

    bool operator==(const ParamTuple& o) const = default;
};

// free_values supplies kappa_0 then kappa_1..kappa_{m/p-1}.
inline ParamTuple make_params(int m, int p, const std::vector<Rational>& free_values) {
    if (m < 1 || p < 1 || m % p != 0)
        throw HypothesisViolation("make_params: p must divide m");
    const int q = m / p;
    if (static_cast<int>(free_values.size()) != q)
        throw HypothesisViolation("make_params: expected " + std::to_string(q) +
                                  " free values (kappa_0 and kappa_1..kappa_{m/p-1})");
    ParamTuple out;
    out.m = m;
    out.p = p;
    out.kappa.assign(m, Rational(0));
    out.kappa[0] = free_values[0];
    for (int t = 1; t <= q - 1; ++t)
        for (int s = 0; s <= p - 1; ++s) out.kappa[t + s * q] = free_values[t];
    // kappa_{s*q} stays 0 for 1 <= s <= p-1
    return out;
}

inline bool params_satisfy_constraint(const ParamTuple& k) {
    if (k.m % k.p != 0 || static_cast<int>(k.kappa.size()) != k.m) return false;
    const int q = k.m / k.p;
    for (int s = 1; s <= k.p - 1; ++s)
        if (k.kappa[s * q] != 0) return false;
    for (int t = 1; t <= q - 1; ++t)
        for (int s = 1; s <= k.p - 1; ++s)
            if (k.kappa[t + s * q] != k.kappa[t]) return false;
    return true;
}

} // namespace dunkl
