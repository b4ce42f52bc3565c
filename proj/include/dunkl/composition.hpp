#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dunkl/permutation.hpp"

namespace dunkl {

using Composition = std::vector<int>;
// residues mod m of an exponent vector; "standard" when nonincreasing
using ParityType = Composition;

inline int comp_degree(const Composition& a) {
    int d = 0;
    for (int v : a) d += v;
    return d;
}

inline bool is_partition(const Composition& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) return false;
    return !a.empty() || true;
}

inline bool is_strictly_decreasing(const Composition& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] <= a[i + 1]) return false;
    return true;
}

inline bool is_standard_parity(const ParityType& a) { return is_partition(a); }

// (w a)_{w(i)} = a_i
inline Composition apply_perm(const Permutation& w, const Composition& a) {
    Composition out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[w[i]] = a[i];
    return out;
}

// Partial-sums order with mu != nu required.
inline bool partial_sums_greater(const Composition& mu, const Composition& nu) {
    if (mu == nu) return false;
    long smu = 0, snu = 0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        smu += mu[j];
        snu += nu[j];
        if (smu < snu) return false;
    }
    return true;
}

// mu |> nu: same degree and length, mu+ > nu+, or mu+ = nu+ and mu > nu in
// the partial-sums order.
inline bool dominance_greater(const Composition& mu, const Composition& nu) {
    if (mu.size() != nu.size()) return false;
    if (comp_degree(mu) != comp_degree(nu)) return false;
    Composition mup = mu, nup = nu;
    std::sort(mup.begin(), mup.end(), std::greater<int>());
    std::sort(nup.begin(), nup.end(), std::greater<int>());
    if (mup == nup) return partial_sums_greater(mu, nu);
    return partial_sums_greater(mup, nup);
}

// Returns (gamma+, w) with w*gamma = gamma+ and, for i<j with gamma_i =
// gamma_j, w(i) < w(j) (stable descending sort).
inline std::pair<Composition, Permutation> sort_to_partition(const Composition& gamma) {
    const int n = static_cast<int>(gamma.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&gamma](int a, int b) { return gamma[a] > gamma[b]; });
    Composition sorted(n);
    Permutation w(n);
    for (int k = 0; k < n; ++k) {
        sorted[k] = gamma[idx[k]];
        w[idx[k]] = k;
    }
    return {sorted, w};
}

// All compositions of degree d into n parts, ascending lexicographic order.
inline std::vector<Composition> compositions_of(int d, int n) {
    std::vector<Composition> out;
    Composition cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Composition> compositions_up_to(int maxd, int n) {
    std::vector<Composition> out;
    for (int d = 0; d <= maxd; ++d) {
        auto part = compositions_of(d, n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline std::vector<Composition> partitions_of(int d, int n) {
    std::vector<Composition> out;
    for (auto& c : compositions_of(d, n))
        if (is_partition(c)) out.push_back(c);
    return out;
}

} // namespace dunkl
