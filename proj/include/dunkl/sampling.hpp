#pragma once

#include <random>

#include "dunkl/jack.hpp"
#include "dunkl/params.hpp"

namespace dunkl {

// Deterministic rational sampling with bounded numerator and denominator.
// uniform_int_distribution is implementation defined, so draws go through
// plain modular reduction to keep output byte-identical across platforms.
struct RatSampler {
    std::mt19937_64 rng;
    int bound = 40;

    explicit RatSampler(unsigned long seed, int bound_ = 40) : rng(seed), bound(bound_) {}

    long draw(long lo, long hi) { // inclusive
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    }

    Rational next(bool positive = false) {
        long num = positive ? draw(1, bound) : draw(-bound, bound);
        long den = draw(1, bound);
        return rat(num, den);
    }
};

std::optional<struct K1Witness> in_K1(const ParamTuple&, int); // fwd (singular.hpp)

// Random parameter tuple; rejection keeps it away from the K_1 witness set
// and the zeta pole set (kappa_0 is drawn positive, which avoids the latter).
inline ParamTuple sample_params(int m, int p, int N, RatSampler& s) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<Rational> free_vals;
        free_vals.push_back(s.next(true)); // kappa_0 > 0
        for (int t = 1; t <= m / p - 1; ++t) free_vals.push_back(s.next());
        ParamTuple k = make_params(m, p, free_vals);
        bool bad = false;
        for (int i = 1; i <= m - 1 && !bad; ++i)
            for (int n = 0; n <= N - 1 && !bad; ++n) {
                Rational v = Rational(n) * k.kappa[0] + rat(i, m) + k.kappa[i];
                if (is_integer(v) && v <= 0) bad = true;
            }
        if (!bad) return k;
    }
    throw InvariantViolation("sample_params: rejection failed to find a regular tuple");
}

inline Rational sample_kappa0(int N, RatSampler& s) {
    for (int tries = 0; tries < 1000; ++tries) {
        Rational k0 = s.next();
        if (!is_zeta_pole(k0, N)) return k0;
    }
    throw InvariantViolation("sample_kappa0: rejection failed");
}

} // namespace dunkl
