#include "dunkl/jack.hpp"

#include <algorithm>

#include "dunkl/errors.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl {

Rational xi(int N, const Rational& kappa0, const Composition& mu, int i) {
    if (i < 1 || i > N) throw HypothesisViolation("xi: index out of range");
    const int i0 = i - 1;
    int above = 0, earlier_equal = 0;
    for (int j = 0; j < N; ++j) {
        if (mu[j] > mu[i0]) ++above;
        if (j < i0 && mu[j] == mu[i0]) ++earlier_equal;
    }
    return kappa0 * Rational(N - above - earlier_equal) + Rational(mu[i0] + 1);
}

EigenData eigen_data(int N, const Rational& kappa0, const Composition& mu) {
    EigenData d;
    d.mu = mu;
    for (int i = 1; i <= N; ++i) d.xi.push_back(xi(N, kappa0, mu, i));
    return d;
}

bool is_zeta_pole(const Rational& kappa0, int N) {
    if (kappa0 >= 0) return false;
    return kappa0.get_den() <= N;
}

namespace {

// Truncated z-series with polynomial coefficients, used to extract one
// factor of the p-basis generating function.
using Series = std::vector<Polynomial>;

Series mul_truncated(const Series& a, const Series& b, int order) {
    Series out(order + 1, Polynomial::zero(a[0].nvars(), a[0].conductor()));
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Polynomial p_factor(const JackContext& ctx, int i, int order) {
    const int N = ctx.N;
    Series s(order + 1, Polynomial::zero(N, ctx.conductor));
    s[0] = Polynomial::constant(N, ctx.conductor, Rational(1));
    // (1 - y_i z)^{-1}
    Series geo(order + 1, Polynomial::zero(N, ctx.conductor));
    for (int a = 0; a <= order; ++a) geo[a] = Polynomial::x_power(N, ctx.conductor, i, a);
    s = mul_truncated(s, geo, order);
    // (1 - y_j z)^{-kappa0} = sum_b (kappa0)_b / b! (y_j z)^b
    for (int j = 1; j <= N; ++j) {
        Series bin(order + 1, Polynomial::zero(N, ctx.conductor));
        Rational c = 1;
        for (int b = 0; b <= order; ++b) {
            if (b > 0) c *= (ctx.kappa0 + Rational(b - 1)) / Rational(b);
            bin[b] = Polynomial::x_power(N, ctx.conductor, j, b).scale(c);
        }
        s = mul_truncated(s, bin, order);
    }
    return s[order];
}

} // namespace

Polynomial p_basis(const JackContext& ctx, const Composition& mu) {
    if (static_cast<int>(mu.size()) != ctx.N)
        throw HypothesisViolation("p_basis: composition length must be N");
    {
        std::lock_guard<std::mutex> lock(ctx.mutex);
        auto it = ctx.p_cache.find(mu);
        if (it != ctx.p_cache.end()) return it->second;
    }
    Polynomial out = Polynomial::constant(ctx.N, ctx.conductor, Rational(1));
    for (int i = 1; i <= ctx.N; ++i)
        if (mu[i - 1] > 0) out = out * p_factor(ctx, i, mu[i - 1]);
    std::lock_guard<std::mutex> lock(ctx.mutex);
    ctx.p_cache.emplace(mu, out);
    return out;
}

Polynomial zeta(const JackContext& ctx, const Composition& mu) {
    if (static_cast<int>(mu.size()) != ctx.N)
        throw HypothesisViolation("zeta: composition length must be N");
    if (is_zeta_pole(ctx.kappa0, ctx.N))
        throw PoleError("zeta: kappa0 = " + to_string(ctx.kappa0) +
                        " is a pole (n*kappa0 + l = 0 for some 1<=n<=N, l>=1)");
    {
        std::lock_guard<std::mutex> lock(ctx.mutex);
        auto it = ctx.zeta_cache.find(mu);
        if (it != ctx.zeta_cache.end()) return it->second;
    }
    const int d = comp_degree(mu);
    const auto basis = compositions_of(d, ctx.N);
    const int n = static_cast<int>(basis.size());

    // Joint kernel of the operators U_i^A - xi_i(mu).
    QMat stacked(ctx.N * n, n);
    for (int i = 1; i <= ctx.N; ++i) {
        QMat mi = operator_matrix_on_basis(basis, ctx.N, ctx.conductor,
                                           [&](const Polynomial& q) {
                                               return apply_UA(ctx.kappa0, i, q);
                                           });
        Rational lam = xi(ctx.N, ctx.kappa0, mu, i);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) stacked.at((i - 1) * n + r, c) = mi.at(r, c);
            stacked.at((i - 1) * n + r, r) -= lam;
        }
    }
    auto kernel = kernel_basis(stacked);
    if (kernel.empty())
        throw PoleError("zeta: no joint eigenvector at kappa0 = " + to_string(ctx.kappa0));
    if (kernel.size() > 1)
        throw PoleError("zeta: eigenvalue collision at kappa0 = " + to_string(ctx.kappa0));

    // Normalize so the p_mu-coordinate is 1.
    QMat pmat(n, n);
    int mu_col = -1;
    std::map<Composition, int> index;
    for (int r = 0; r < n; ++r) index.emplace(basis[r], r);
    for (int c = 0; c < n; ++c) {
        if (basis[c] == mu) mu_col = c;
        Polynomial pv = p_basis(ctx, basis[c]);
        for (const auto& [e, v] : pv.terms()) pmat.at(index.at(e), c) = v.as_rational();
    }
    auto coords = solve(pmat, kernel[0]);
    if (!coords)
        throw PoleError("zeta: p-basis degenerate at kappa0 = " + to_string(ctx.kappa0));
    if ((*coords)[mu_col] == 0)
        throw PoleError("zeta: joint eigenvector has zero p_mu-coordinate at kappa0 = " +
                        to_string(ctx.kappa0));
    Rational scale = Rational(1) / (*coords)[mu_col];

    Polynomial z(ctx.N, ctx.conductor);
    for (int r = 0; r < n; ++r)
        if (kernel[0][r] != 0)
            z.add_term(basis[r],
                       CycNumber::from_rational(kernel[0][r] * scale, ctx.conductor));

    for (int i = 1; i <= ctx.N; ++i) {
        Polynomial lhs = apply_UA(ctx.kappa0, i, z);
        Polynomial rhs = z.scale(xi(ctx.N, ctx.kappa0, mu, i));
        if (lhs != rhs) throw InvariantViolation("zeta: eigenvalue certification failed");
    }

    std::lock_guard<std::mutex> lock(ctx.mutex);
    ctx.zeta_cache.emplace(mu, z);
    return z;
}

Rational e_factor(int N, const Rational& kappa0, const Composition& gamma, int sign) {
    Rational out = 1;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            if (!(gamma[i - 1] < gamma[j - 1])) continue;
            Rational den = xi(N, kappa0, gamma, j) - xi(N, kappa0, gamma, i);
            if (den == 0) throw PoleError("e_factor: xi collision");
            out *= Rational(1) + Rational(sign) * kappa0 / den;
        }
    return out;
}

Rational pochhammer(int N, const Rational& kappa0, const Rational& t, const Composition& lambda) {
    if (!is_partition(lambda))
        throw HypothesisViolation("pochhammer: lambda must be a partition");
    Rational out = 1;
    for (std::size_t i = 0; i < lambda.size() && static_cast<int>(i) < N; ++i)
        out *= rising_factorial(t - Rational(static_cast<long>(i)) * kappa0, lambda[i]);
    return out;
}

Rational hook(const Composition& lambda, const Rational& t, const Rational& kappa0) {
    if (!is_partition(lambda)) throw HypothesisViolation("hook: lambda must be a partition");
    Rational out = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 1; j <= lambda[i]; ++j) {
            int leg = 0;
            for (std::size_t s = i + 1; s < lambda.size(); ++s)
                if (j <= lambda[s]) ++leg;
            out *= Rational(lambda[i] - j) + t + kappa0 * Rational(leg);
        }
    }
    return out;
}

Composition chi(int i, const ParityType& alpha) {
    if (i < 1) throw HypothesisViolation("chi: index must be >= 1");
    Composition out(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) out[j] = alpha[j] >= i ? 1 : 0;
    return out;
}

Rational norm_closed_form(const OperatorContext& ctx, const ParityType& alpha,
                          const Composition& gamma) {
    if (!is_standard_parity(alpha))
        throw HypothesisViolation("norm_closed_form: alpha must be standard (nonincreasing)");
    for (int a : alpha)
        if (a < 0 || a >= ctx.m)
            throw HypothesisViolation("norm_closed_form: alpha entries must lie in [0, m-1]");
    const Rational& k0 = ctx.kappa0();
    Rational out = pow_rational(Rational(ctx.m),
                                comp_degree(alpha) + static_cast<long>(ctx.m) * comp_degree(gamma));
    for (int i = 1; i <= ctx.m - 1; ++i) {
        Rational t = Rational(ctx.N - 1) * k0 + rat(i, ctx.m) + ctx.kappa.kappa[i];
        Composition lam = gamma;
        Composition ch = chi(i, alpha);
        for (int j = 0; j < ctx.N; ++j) lam[j] += ch[j];
        out *= pochhammer(ctx.N, k0, t, sort_to_partition(lam).first);
    }
    Composition gplus = sort_to_partition(gamma).first;
    out *= pochhammer(ctx.N, k0, Rational(ctx.N) * k0 + 1, gplus);
    Rational h1 = hook(gplus, Rational(1), k0);
    if (h1 == 0) throw PoleError("norm_closed_form: h(gamma+, 1) vanishes");
    out *= hook(gplus, k0 + 1, k0) / h1;
    out *= e_factor(ctx.N, k0, gamma, +1) * e_factor(ctx.N, k0, gamma, -1);
    return out;
}

std::pair<Polynomial, std::vector<Rational>> eigenfunction(const OperatorContext& ctx,
                                                           const ParityType& alpha,
                                                           const Composition& gamma,
                                                           const Permutation& w) {
    if (!is_standard_parity(alpha))
        throw HypothesisViolation("eigenfunction: alpha must be standard");
    for (int a : alpha)
        if (a < 0 || a >= ctx.m)
            throw HypothesisViolation("eigenfunction: alpha entries must lie in [0, m-1]");
    if (!is_permutation(w) || static_cast<int>(w.size()) != ctx.N)
        throw HypothesisViolation("eigenfunction: w is not a permutation of 1..N");
    for (int i = 0; i < ctx.N; ++i)
        for (int j = i + 1; j < ctx.N; ++j)
            if (alpha[i] == alpha[j] && w[i] > w[j])
                throw HypothesisViolation(
                    "eigenfunction: w must preserve order within equal-alpha blocks");

    JackContext jc(ctx.N, ctx.kappa0(), ctx.m);
    Polynomial zg = zeta(jc, gamma);
    Polynomial f = Polynomial::monomial(ctx.N, ctx.m, alpha, Rational(1)) * y_view(zg, ctx.m);
    f = act_perm(w, f);

    std::vector<Rational> eig(ctx.N);
    for (int i = 1; i <= ctx.N; ++i) {
        Rational xv = xi(ctx.N, ctx.kappa0(), gamma, i);
        Rational val;
        if (alpha[i - 1] < ctx.m - 1) {
            val = Rational(ctx.m) * (rat(alpha[i - 1] + 1, ctx.m) - 1 +
                                     ctx.kappa.kappa[alpha[i - 1] + 1] + xv - ctx.kappa0());
        } else {
            val = Rational(ctx.m) * (xv - ctx.kappa0());
        }
        eig[w[i - 1]] = val;
    }
    return {f, eig};
}

Polynomial a_delta(const JackContext& ctx, const Composition& lambda) {
    if (static_cast<int>(lambda.size()) != ctx.N)
        throw HypothesisViolation("a_delta: composition length must be N");
    if (!is_strictly_decreasing(lambda))
        throw HypothesisViolation("a_delta: lambda must have strictly decreasing parts");
    Polynomial zl = zeta(ctx, lambda);
    Polynomial out(ctx.N, ctx.conductor);
    for (const auto& w : all_permutations(ctx.N)) {
        Polynomial term = act_perm(w, zl);
        if (perm_sign(w) > 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

std::pair<Rational, Polynomial> hanlon_norm(const OperatorContext& ctx, int t) {
    if (t < 0 || t > ctx.m - 1) throw HypothesisViolation("hanlon_norm: t must lie in [0, m-1]");
    const int N = ctx.N;
    const Rational& k0 = ctx.kappa0();

    Polynomial f = Polynomial::constant(N, ctx.m, Rational(1));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            f = f * (Polynomial::x_power(N, ctx.m, i, ctx.m) -
                     Polynomial::x_power(N, ctx.m, j, ctx.m));
    f = f * Polynomial::monomial(N, ctx.m, Composition(N, t), Rational(1));

    Composition delta(N);
    for (int i = 0; i < N; ++i) delta[i] = N - 1 - i;
    Composition delta_plus_one = delta;
    for (int i = 0; i < N; ++i) delta_plus_one[i] += 1;

    // m^{deg f} = m^{tN + m N(N-1)/2}
    long deg_f = static_cast<long>(t) * N + static_cast<long>(ctx.m) * N * (N - 1) / 2;
    Rational out = Rational(factorial(N)) * pow_rational(Rational(ctx.m), deg_f);
    for (int i = 1; i <= ctx.m - 1; ++i) {
        Rational base = Rational(N - 1) * k0 + rat(i, ctx.m) + ctx.kappa.kappa[i];
        out *= pochhammer(N, k0, base, i <= t ? delta_plus_one : delta);
    }
    out *= pochhammer(N, k0, Rational(N) * k0 + 1, delta);
    return {out, f};
}

} // namespace dunkl
