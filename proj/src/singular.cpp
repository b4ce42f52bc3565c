#include "dunkl/singular.hpp"

#include <sstream>

#include <json.hpp>

#include "dunkl/errors.hpp"

namespace dunkl {

std::optional<K1Witness> in_K1(const ParamTuple& kappa, int N) {
    for (int i = 1; i <= kappa.m - 1; ++i) {
        for (int n = 0; n <= N - 1; ++n) {
            Rational v = Rational(n) * kappa.kappa[0] + rat(i, kappa.m) + kappa.kappa[i];
            if (is_integer(v) && v <= 0) return K1Witness{n, i, v};
        }
    }
    return std::nullopt;
}

std::optional<K0Witness> in_K0(const ParamTuple& kappa, int N, const K0Config& cfg) {
    const Rational& k0 = kappa.kappa[0];
    if (k0 >= 0) return std::nullopt;
    for (int n = 2; n <= N; ++n) {
        int j_lo = cfg.j_lo_base + cfg.j_lo_coef * n;
        int j_hi = cfg.j_hi_base + cfg.j_hi_coef * n;
        for (int j = std::max(1, j_lo); j <= j_hi; ++j) {
            Rational l = -k0 - rat(j, n);
            if (is_integer(l) && l >= 0) return K0Witness{j, n, l.get_num().get_si()};
        }
    }
    return std::nullopt;
}

std::vector<int> gram_corank_oracle(const OperatorContext& ctx, int up_to_degree) {
    if (up_to_degree < 1) throw HypothesisViolation("oracle: degree bound must be >= 1");
    std::vector<int> out;
    for (int d = 1; d <= up_to_degree; ++d) out.push_back(corank(gram_matrix_q(ctx, d)));
    return out;
}

std::vector<Polynomial> radical_basis(const OperatorContext& ctx, int degree) {
    std::vector<Polynomial> out;
    if (degree < 1) return out;
    const auto basis = compositions_of(degree, ctx.N);
    const auto image_basis = compositions_of(degree - 1, ctx.N);
    const int n = static_cast<int>(basis.size());
    const int rows_per = static_cast<int>(image_basis.size());
    std::map<Composition, int> index;
    for (int r = 0; r < rows_per; ++r) index.emplace(image_basis[r], r);
    QMat stacked(ctx.N * rows_per, n);
    for (int col = 0; col < n; ++col) {
        Polynomial mono = Polynomial::monomial(ctx.N, ctx.m, basis[col], Rational(1));
        for (int i = 1; i <= ctx.N; ++i) {
            Polynomial img = apply_T(ctx, i, mono);
            for (const auto& [e, c] : img.terms())
                stacked.at((i - 1) * rows_per + index.at(e), col) = c.as_rational();
        }
    }
    for (const auto& v : kernel_basis(stacked)) {
        Polynomial q(ctx.N, ctx.m);
        for (int r = 0; r < n; ++r)
            if (v[r] != 0) q.add_term(basis[r], CycNumber::from_rational(v[r], ctx.m));
        out.push_back(std::move(q));
    }
    return out;
}

std::optional<int> min_radical_degree(const OperatorContext& ctx, int bound) {
    for (int d = 1; d <= bound; ++d) {
        bool hit = false;
        // candidates x^alpha zeta_lambda with |alpha| + m|lambda| = d
        for (int la = 0; la * ctx.m <= d; ++la) {
            int da = d - la * ctx.m;
            if (da > ctx.N * (ctx.m - 1)) continue;
            for (const auto& alpha : compositions_of(da, ctx.N)) {
                if (!is_standard_parity(alpha)) continue;
                bool ok = true;
                for (int a : alpha)
                    if (a >= ctx.m) ok = false;
                if (!ok) continue;
                for (const auto& lam : partitions_of(la, ctx.N)) {
                    try {
                        if (norm_closed_form(ctx, alpha, lam) == 0) hit = true;
                    } catch (const PoleError&) {
                        // a pole is not a vanishing norm; skip
                    }
                    if (hit) break;
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (hit) return d;
    }
    return std::nullopt;
}

SingularReport singular_report(const OperatorContext& ctx, int oracle_degree,
                               const K0Config& cfg) {
    SingularReport r;
    r.kappa = ctx.kappa;
    r.N = ctx.N;
    auto w0 = in_K0(ctx.kappa, ctx.N, cfg);
    r.k0_member = w0.has_value();
    r.k0_witness = w0;
    auto w1 = in_K1(ctx.kappa, ctx.N);
    r.k1_member = w1.has_value();
    r.k1_witness = w1;
    r.oracle_degree_checked = oracle_degree;
    r.oracle_corank_by_degree = gram_corank_oracle(ctx, oracle_degree);
    bool degenerate = false;
    for (int c : r.oracle_corank_by_degree)
        if (c > 0) degenerate = true;
    r.k0_confirmed = r.k0_member && degenerate;
    return r;
}

std::string singular_report_json(const SingularReport& r) {
    nlohmann::ordered_json j;
    auto kap = nlohmann::ordered_json::array();
    for (const auto& v : r.kappa.kappa) kap.push_back(to_string(v));
    j["kappa"] = kap;
    j["K0"] = nlohmann::ordered_json{{"member", r.k0_member},
                                     {"confirmed", r.k0_confirmed}};
    if (r.k0_witness)
        j["K0"]["witness"] =
            nlohmann::ordered_json::array({r.k0_witness->j, r.k0_witness->n, r.k0_witness->l});
    j["K1"] = nlohmann::ordered_json{{"member", r.k1_member}};
    if (r.k1_witness)
        j["K1"]["witness"] =
            nlohmann::ordered_json::array({r.k1_witness->n, r.k1_witness->i});
    auto oracle = nlohmann::ordered_json::array();
    for (std::size_t d = 0; d < r.oracle_corank_by_degree.size(); ++d)
        oracle.push_back(nlohmann::ordered_json{{"degree", static_cast<int>(d) + 1},
                                               {"corank", r.oracle_corank_by_degree[d]}});
    j["oracle"] = oracle;
    return j.dump();
}

namespace {

Polynomial apply_T_times(const OperatorContext& ctx, int i, int times, Polynomial h) {
    for (int k = 0; k < times && !h.is_zero(); ++k) h = apply_T(ctx, i, h);
    return h;
}

Polynomial vandermonde_y(int N, int conductor) {
    Polynomial a = Polynomial::constant(N, conductor, Rational(1));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            a = a * (Polynomial::x_power(N, conductor, i, 1) -
                     Polynomial::x_power(N, conductor, j, 1));
    return a;
}

} // namespace

Polynomial apply_y_operator(const OperatorContext& ctx, const Polynomial& f_in_y,
                            const Polynomial& h) {
    Polynomial out(ctx.N, ctx.m);
    for (const auto& [beta, c] : f_in_y.terms()) {
        Polynomial r = h;
        for (int i = 1; i <= ctx.N && !r.is_zero(); ++i)
            r = apply_T_times(ctx, i, ctx.m * beta[i - 1], r);
        out += r.scale(c.conjugate());
    }
    return out;
}

bool is_symmetric_in_y(const Polynomial& g_in_y) {
    const int N = g_in_y.nvars();
    for (int i = 1; i < N; ++i) {
        Permutation w = identity_perm(N);
        std::swap(w[i - 1], w[i]);
        if (act_perm(w, g_in_y) != g_in_y) return false;
    }
    return true;
}

bool is_invariant(const OperatorContext& ctx, const Polynomial& p) {
    for (const auto& g : reflections(ctx.m, ctx.p, ctx.N))
        if (act(g, p) != p) return false;
    return true;
}

bool verify_shift_cyclic_full(const OperatorContext& ctx, int t, const Polynomial& g_in_y) {
    if (ctx.p != 1) throw HypothesisViolation("cyclic-full shift requires p = 1");
    if (t < 1 || t > ctx.m - 1) throw HypothesisViolation("cyclic-full shift needs 1 <= t <= m-1");
    std::vector<Rational> free_vals = ctx.kappa.free_values();
    for (int s = 1; s <= t; ++s) free_vals[s] += 1;
    OperatorContext shifted(ctx.m, 1, ctx.N, make_params(ctx.m, 1, free_vals));
    Polynomial xt = Polynomial::monomial(ctx.N, ctx.m, Composition(ctx.N, t), Rational(1));
    Polynomial gx = y_view(g_in_y, ctx.m);
    for (int i = 1; i <= ctx.N; ++i) {
        Polynomial lhs = apply_T_times(ctx, i, ctx.m, xt * gx);
        Polynomial rhs = xt * apply_T_times(shifted, i, ctx.m, gx);
        if (lhs != rhs) return false;
    }
    return true;
}

bool verify_shift_cyclic_p(const OperatorContext& ctx, int t, int s, const Polynomial& g_in_y) {
    const int q = ctx.m / ctx.p;
    if (t < 1 || t > q - 1) throw HypothesisViolation("cyclic shift needs 1 <= t <= m/p - 1");
    if (s < 0 || s > ctx.p - 1) throw HypothesisViolation("cyclic shift needs 0 <= s <= p-1");
    std::vector<Rational> free_vals = ctx.kappa.free_values();
    for (int r = 1; r <= t; ++r) free_vals[r] += rat(1, ctx.p);
    OperatorContext shifted(ctx.m, ctx.p, ctx.N, make_params(ctx.m, ctx.p, free_vals));
    Polynomial gx = y_view(g_in_y, ctx.m);
    Polynomial x_t = Polynomial::monomial(ctx.N, ctx.m, Composition(ctx.N, t), Rational(1));
    Polynomial x_ts =
        Polynomial::monomial(ctx.N, ctx.m, Composition(ctx.N, t + s * q), Rational(1));
    Polynomial x_s = Polynomial::monomial(ctx.N, ctx.m, Composition(ctx.N, s * q), Rational(1));
    for (int i = 1; i <= ctx.N; ++i) {
        Polynomial lhs = apply_T_times(ctx, i, q, x_ts * gx);
        Polynomial rhs = x_t * apply_T_times(shifted, i, q, x_s * gx);
        if (lhs != rhs) return false;
    }
    return true;
}

bool verify_shift_symmetric(const OperatorContext& ctx, const Polynomial& f_in_y,
                            const Polynomial& g_in_y) {
    if (!is_symmetric_in_y(f_in_y) || !is_symmetric_in_y(g_in_y))
        throw HypothesisViolation("symmetric shift needs symmetric f, g");
    if (!f_in_y.has_rational_coefficients() || !g_in_y.has_rational_coefficients())
        throw HypothesisViolation("symmetric shift needs real (rational) f, g");
    std::vector<Rational> free_vals = ctx.kappa.free_values();
    free_vals[0] += 1;
    OperatorContext shifted(ctx.m, ctx.p, ctx.N, make_params(ctx.m, ctx.p, free_vals));
    Polynomial a = y_view(vandermonde_y(ctx.N, ctx.m), ctx.m);
    Polynomial gx = y_view(g_in_y, ctx.m);
    Polynomial lhs = apply_y_operator(ctx, f_in_y, a * gx);
    Polynomial rhs = a * apply_y_operator(shifted, f_in_y, gx);
    return lhs == rhs;
}

ParamTuple shift_params_plus_one(const OperatorContext& ctx) {
    std::vector<Rational> free_vals = ctx.kappa.free_values();
    if (ctx.N >= 2) free_vals[0] += 1; // period-2 orbit exists only for N >= 2
    for (std::size_t r = 1; r < free_vals.size(); ++r) free_vals[r] += rat(1, ctx.p);
    return make_params(ctx.m, ctx.p, free_vals);
}

bool verify_shift_corollary(const OperatorContext& ctx, const Polynomial& p_inv,
                            const Polynomial& q_inv) {
    if (!is_invariant(ctx, p_inv) || !is_invariant(ctx, q_inv))
        throw HypothesisViolation("corollary shift needs G-invariant p, q");
    OperatorContext shifted(ctx.m, ctx.p, ctx.N, shift_params_plus_one(ctx));
    const int q = ctx.m / ctx.p;
    Polynomial pi = Polynomial::monomial(ctx.N, ctx.m, Composition(ctx.N, q - 1), Rational(1)) *
                    y_view(vandermonde_y(ctx.N, ctx.m), ctx.m);
    CycNumber lhs = pairing(ctx, pi * p_inv, pi * q_inv);
    CycNumber rhs = pairing(ctx, pi, pi) * pairing(shifted, p_inv, q_inv);
    return lhs == rhs;
}

} // namespace dunkl
