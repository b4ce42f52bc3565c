#include "dunkl/operators.hpp"

#include <map>

#include "dunkl/errors.hpp"

namespace dunkl {

OperatorContext::OperatorContext(int m_, int p_, int N_, ParamTuple kappa_)
    : m(m_), p(p_), N(N_), kappa(std::move(kappa_)) {
    if (m < 1 || p < 1 || m % p != 0) throw HypothesisViolation("context: p must divide m");
    if (N < 1) throw HypothesisViolation("context: N must be positive");
    if (kappa.m != m || kappa.p != p || !params_satisfy_constraint(kappa))
        throw HypothesisViolation("context: parameter tuple violates the G(m,p,N) constraint");
}

namespace {

void check_input(const OperatorContext& ctx, const Polynomial& p) {
    if (p.nvars() != ctx.N) throw HypothesisViolation("polynomial has wrong number of variables");
    if (p.conductor() != ctx.m) throw ConductorMismatch("polynomial conductor must equal m");
}

// Adds coeff * (x^e - (i,j)x^e)/(x_i - x_j), restricted to the exponents kept
// by pi_j(e_j) when residue_step = m (and unrestricted when residue_step = 1),
// using the closed summation: sign(a-b) * sum_t x_i^{a+b-t-1} x_j^t.
void add_divided_difference(Polynomial& out, const Composition& e, int i0, int j0,
                            int residue_step, const CycNumber& coeff) {
    const int a = e[i0];
    const int b = e[j0];
    if (a == b) return;
    Composition t_exp = e;
    if (a > b) {
        for (int t = b; t <= a - 1; t += residue_step) {
            t_exp[i0] = a + b - t - 1;
            t_exp[j0] = t;
            out.add_term(t_exp, coeff);
        }
    } else {
        for (int t = b - residue_step; t >= a; t -= residue_step) {
            t_exp[i0] = a + b - t - 1;
            t_exp[j0] = t;
            out.add_term(t_exp, -coeff);
        }
    }
}

} // namespace

Polynomial apply_T(const OperatorContext& ctx, int i, const Polynomial& p) {
    if (i < 1 || i > ctx.N) throw HypothesisViolation("operator index out of range");
    check_input(ctx, p);
    const int i0 = i - 1;
    Polynomial out(ctx.N, ctx.m);
    const Rational mk0 = Rational(ctx.m) * ctx.kappa0();
    for (const auto& [e, c] : p.terms()) {
        if (e[i0] > 0) {
            Composition d = e;
            d[i0] -= 1;
            out.add_term(d, c * Rational(e[i0]));
        }
        if (mk0 != 0) {
            const CycNumber cc = c * mk0;
            for (int j0 = 0; j0 < ctx.N; ++j0) {
                if (j0 == i0) continue;
                add_divided_difference(out, e, i0, j0, ctx.m, cc);
            }
        }
        const int s = e[i0] % ctx.m;
        if (s != 0) {
            Rational ks = ctx.kappa.kappa[s];
            if (ks != 0) {
                Composition d = e;
                d[i0] -= 1;
                out.add_term(d, c * (Rational(ctx.m) * ks));
            }
        }
    }
    return out;
}

Polynomial apply_D(const Rational& kappa0, int i, const Polynomial& g) {
    if (i < 1 || i > g.nvars()) throw HypothesisViolation("operator index out of range");
    const int i0 = i - 1;
    Polynomial out(g.nvars(), g.conductor());
    for (const auto& [e, c] : g.terms()) {
        if (e[i0] > 0) {
            Composition d = e;
            d[i0] -= 1;
            out.add_term(d, c * Rational(e[i0]));
        }
        if (kappa0 != 0) {
            const CycNumber cc = c * kappa0;
            for (int j0 = 0; j0 < g.nvars(); ++j0) {
                if (j0 == i0) continue;
                add_divided_difference(out, e, i0, j0, 1, cc);
            }
        }
    }
    return out;
}

Polynomial apply_U(const OperatorContext& ctx, int i, const Polynomial& p) {
    check_input(ctx, p);
    Polynomial xi_p = Polynomial::x_power(ctx.N, ctx.m, i, 1) * p;
    Polynomial out = apply_T(ctx, i, xi_p);
    if (ctx.kappa0() != 0)
        for (int j = 1; j < i; ++j)
            out -= lambda_apply(ctx.m, i, j, p).scale(ctx.kappa0());
    return out;
}

Polynomial apply_UA(const Rational& kappa0, int i, const Polynomial& g) {
    Polynomial yi_g = Polynomial::x_power(g.nvars(), g.conductor(), i, 1) * g;
    Polynomial out = apply_D(kappa0, i, yi_g);
    if (kappa0 != 0) {
        out += g.scale(kappa0);
        for (int j = 1; j < i; ++j) {
            Permutation w = identity_perm(g.nvars());
            std::swap(w[i - 1], w[j - 1]);
            out -= act_perm(w, g).scale(kappa0);
        }
    }
    return out;
}

Polynomial apply_T_power(const OperatorContext& ctx, const Composition& alpha,
                         const Polynomial& q) {
    Polynomial r = q;
    for (int i = 1; i <= ctx.N; ++i) {
        for (int rep = 0; rep < alpha[i - 1]; ++rep) {
            if (r.is_zero()) return r;
            r = apply_T(ctx, i, r);
        }
    }
    return r;
}

CycNumber pairing(const OperatorContext& ctx, const Polynomial& p, const Polynomial& q) {
    check_input(ctx, p);
    check_input(ctx, q);
    auto pc = p.homogeneous_components();
    auto qc = q.homogeneous_components();
    CycNumber total = CycNumber::zero(ctx.m);
    for (const auto& [d, pd] : pc) {
        auto it = qc.find(d);
        if (it == qc.end()) continue;
        for (const auto& [alpha, c] : pd.terms()) {
            Polynomial r = apply_T_power(ctx, alpha, it->second);
            total += c.conjugate() * r.evaluate_at_zero();
        }
    }
    return total;
}

std::vector<Composition> gram_basis(const OperatorContext& ctx, int degree) {
    return compositions_of(degree, ctx.N);
}

std::vector<std::vector<CycNumber>> gram_matrix(const OperatorContext& ctx, int degree) {
    if (degree < 0) throw HypothesisViolation("gram_matrix: degree must be nonnegative");
    auto basis = gram_basis(ctx, degree);
    const std::size_t n = basis.size();
    std::vector<std::vector<CycNumber>> g(n, std::vector<CycNumber>(n, CycNumber::zero(ctx.m)));
    for (std::size_t col = 0; col < n; ++col) {
        Polynomial q = Polynomial::monomial(ctx.N, ctx.m, basis[col], Rational(1));
        for (std::size_t row = 0; row < n; ++row) {
            Polynomial r = apply_T_power(ctx, basis[row], q);
            g[row][col] = r.evaluate_at_zero();
        }
    }
    return g;
}

QMat gram_matrix_q(const OperatorContext& ctx, int degree) {
    auto g = gram_matrix(ctx, degree);
    const int n = static_cast<int>(g.size());
    QMat out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = g[r][c].as_rational();
    return out;
}

Polynomial euler_apply(const OperatorContext& ctx, const Polynomial& p) {
    Polynomial out(ctx.N, ctx.m);
    for (int i = 1; i <= ctx.N; ++i)
        out += Polynomial::x_power(ctx.N, ctx.m, i, 1) * apply_T(ctx, i, p);
    return out;
}

Polynomial commutator_xj_Ti(const OperatorContext& ctx, int i, int j, const Polynomial& p) {
    if (i == j) throw HypothesisViolation("commutator_xj_Ti needs i != j");
    Polynomial xj = Polynomial::x_power(ctx.N, ctx.m, j, 1);
    return xj * apply_T(ctx, i, p) - apply_T(ctx, i, xj * p);
}

GroupAlgebraOp commutator_group_op(const OperatorContext& ctx, int i, int j) {
    if (i == j) throw HypothesisViolation("commutator_group_op needs i != j");
    GroupAlgebraOp op;
    for (int s = 0; s < ctx.m; ++s) {
        CycNumber c = CycNumber::root_of_unity_power(ctx.m, s) * ctx.kappa0();
        if (!c.is_zero()) op.terms.emplace_back(c, period2_reflection(ctx.N, j, i, s, ctx.m));
    }
    return op;
}

GroupAlgebraOp build_z(const OperatorContext& ctx) {
    std::map<GroupElement, CycNumber> acc;
    auto add = [&](const GroupElement& g, const CycNumber& c) {
        auto it = acc.find(g);
        if (it == acc.end())
            acc.emplace(g, c);
        else
            it->second += c;
    };
    const CycNumber k0 = CycNumber::from_rational(ctx.kappa0(), ctx.m);
    for (int i = 1; i <= ctx.N; ++i)
        for (int j = i + 1; j <= ctx.N; ++j)
            for (int s = 0; s < ctx.m; ++s) {
                add(identity_element(ctx.N), k0);
                add(period2_reflection(ctx.N, i, j, s, ctx.m), -k0);
            }
    for (int j = 1; j <= ctx.N; ++j)
        for (int s = 1; s <= ctx.m - 1; ++s) {
            const Rational& ks = ctx.kappa.kappa[s];
            if (ks == 0) continue;
            for (int r = 0; r < ctx.m; ++r) {
                CycNumber c = CycNumber::root_of_unity_power(ctx.m, -static_cast<long>(s) * r) * ks;
                add(tau_power(ctx.N, j, r, ctx.m), c);
            }
        }
    GroupAlgebraOp op;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) op.terms.emplace_back(c, g);
    return op;
}

QMat operator_matrix_on_basis(const std::vector<Composition>& basis, int nvars, int conductor,
                              const std::function<Polynomial(const Polynomial&)>& op) {
    const int n = static_cast<int>(basis.size());
    std::map<Composition, int> index;
    for (int c = 0; c < n; ++c) index.emplace(basis[c], c);
    QMat m(n, n);
    for (int col = 0; col < n; ++col) {
        Polynomial img = op(Polynomial::monomial(nvars, conductor, basis[col], Rational(1)));
        for (const auto& [e, v] : img.terms()) {
            auto it = index.find(e);
            if (it == index.end())
                throw InvariantViolation("operator does not preserve the homogeneous block");
            m.at(it->second, col) = v.as_rational();
        }
    }
    return m;
}

} // namespace dunkl
