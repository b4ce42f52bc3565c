#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

// w[i] = w(i), 0-based images of 0..n-1.
using Permutation = std::vector<int>;

inline Permutation identity_perm(int n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

// (w o v)(i) = w(v(i))
inline Permutation compose_perm(const Permutation& w, const Permutation& v) {
    Permutation out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = w[v[i]];
    return out;
}

inline Permutation inverse_perm(const Permutation& w) {
    Permutation out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[w[i]] = static_cast<int>(i);
    return out;
}

inline int perm_sign(const Permutation& w) {
    std::vector<bool> seen(w.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = w[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

inline bool is_permutation(const Permutation& w) {
    std::vector<bool> seen(w.size(), false);
    for (int v : w) {
        if (v < 0 || v >= static_cast<int>(w.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline std::vector<Permutation> all_permutations(int n) {
    Permutation w = identity_perm(n);
    std::vector<Permutation> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace dunkl
