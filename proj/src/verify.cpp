#include "dunkl/verify.hpp"

#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

std::string describe_params(const ParamTuple& k) {
    std::ostringstream os;
    os << "kappa=(";
    for (std::size_t i = 0; i < k.kappa.size(); ++i)
        os << (i ? "," : "") << to_string(k.kappa[i]);
    os << ")";
    return os.str();
}

namespace {

std::string describe_comp(const Composition& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

Polynomial random_homogeneous(RatSampler& s, int nvars, int conductor, int degree,
                              bool complex_coeffs) {
    Polynomial out(nvars, conductor);
    auto basis = compositions_of(degree, nvars);
    for (const auto& e : basis) {
        if (s.draw(0, 2) == 0) continue; // keep it sparse
        CycNumber c = CycNumber::from_rational(s.next(), conductor);
        if (complex_coeffs && conductor > 1)
            c = c * CycNumber::root_of_unity_power(conductor, s.draw(0, conductor - 1));
        out += Polynomial::monomial(nvars, conductor, e, Rational(1)).scale(c);
    }
    if (out.is_zero() && !basis.empty())
        out = Polynomial::monomial(nvars, conductor, basis.front(), s.next(true));
    return out;
}

// admissible permutations for a standard parity type: order preserving on
// equal-alpha blocks
std::vector<Permutation> admissible_perms(const ParityType& alpha) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(static_cast<int>(alpha.size()))) {
        bool ok = true;
        for (std::size_t i = 0; i < alpha.size() && ok; ++i)
            for (std::size_t j = i + 1; j < alpha.size() && ok; ++j)
                if (alpha[i] == alpha[j] && w[i] > w[j]) ok = false;
        if (ok) out.push_back(w);
    }
    return out;
}

int invariant_dimension(int m, int p, int N, int degree) {
    const auto group = enumerate_group(m, p, N);
    const auto basis = compositions_of(degree, N);
    const int n = static_cast<int>(basis.size());
    std::map<Composition, int> index;
    for (int c = 0; c < n; ++c) index.emplace(basis[c], c);
    std::vector<std::vector<CycNumber>> reynolds(n,
                                                 std::vector<CycNumber>(n, CycNumber::zero(m)));
    for (const auto& g : group) {
        for (int col = 0; col < n; ++col) {
            Polynomial img = act(g, Polynomial::monomial(N, m, basis[col], Rational(1)));
            for (const auto& [e, c] : img.terms()) reynolds[index.at(e)][col] += c;
        }
    }
    return rank(std::move(reynolds));
}

} // namespace

SuiteReport suite_commutativity(int m, int p, int N, int degree,
                                const std::vector<ParamTuple>& kappas) {
    SuiteReport rep;
    rep.suite = "commute";
    rep.kappa_degree_bound = 2;
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);
        bool ok = true;
        std::string detail;
        for (int d = 0; d <= degree && ok; ++d) {
            for (const auto& e : compositions_of(d, N)) {
                Polynomial mono = Polynomial::monomial(N, m, e, Rational(1));
                for (int i = 1; i <= N && ok; ++i)
                    for (int j = i + 1; j <= N && ok; ++j) {
                        Polynomial lhs = apply_T(ctx, i, apply_T(ctx, j, mono));
                        Polynomial rhs = apply_T(ctx, j, apply_T(ctx, i, mono));
                        if (lhs != rhs) {
                            ok = false;
                            detail = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                     " alpha=" + describe_comp(e) + " " + describe_params(k);
                        }
                    }
                if (!ok) break;
            }
        }
        rep.add("T_i T_j = T_j T_i, deg<=" + std::to_string(degree) + ", " + describe_params(k),
                ok, detail);
    }
    return rep;
}

SuiteReport suite_hermiticity(int m, int p, int N, int degree,
                              const std::vector<ParamTuple>& kappas, unsigned long seed) {
    SuiteReport rep;
    rep.suite = "hermitian";
    rep.kappa_degree_bound = degree;
    RatSampler s(seed, 12);
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);
        bool herm = true, contra = true, sadj = true, ginv = true;
        std::string d_herm, d_contra, d_sadj, d_ginv;
        for (int d = 1; d <= degree; ++d) {
            Polynomial pp = random_homogeneous(s, N, m, d, true);
            Polynomial qq = random_homogeneous(s, N, m, d, true);
            Polynomial q1 = random_homogeneous(s, N, m, d + 1, true);
            if (pairing(ctx, pp, qq) != pairing(ctx, qq, pp).conjugate()) {
                herm = false;
                d_herm = "deg=" + std::to_string(d) + " " + describe_params(k);
            }
            for (int i = 1; i <= N; ++i) {
                Polynomial xi_p = Polynomial::x_power(N, m, i, 1) * pp;
                if (pairing(ctx, xi_p, q1) != pairing(ctx, pp, apply_T(ctx, i, q1))) {
                    contra = false;
                    d_contra = "i=" + std::to_string(i) + " deg=" + std::to_string(d);
                }
                if (pairing(ctx, apply_U(ctx, i, pp), qq) !=
                    pairing(ctx, pp, apply_U(ctx, i, qq))) {
                    sadj = false;
                    d_sadj = "i=" + std::to_string(i) + " deg=" + std::to_string(d);
                }
            }
            // invariance under a random group element
            GroupElement g = identity_element(N);
            const auto refl = reflections(m, p, N);
            for (int step = 0; step < 3 && !refl.empty(); ++step)
                g = compose(g, refl[s.draw(0, static_cast<long>(refl.size()) - 1)], m);
            if (pairing(ctx, act(g, pp), act(g, qq)) != pairing(ctx, pp, qq)) {
                ginv = false;
                d_ginv = "deg=" + std::to_string(d) + " g=" + g.to_text();
            }
        }
        rep.add("(p,q) = conj((q,p)), " + describe_params(k), herm, d_herm);
        rep.add("(x_i p, q) = (p, T_i q), " + describe_params(k), contra, d_contra);
        rep.add("(U_i p, q) = (p, U_i q), " + describe_params(k), sadj, d_sadj);
        rep.add("(g p, g q) = (p, q), " + describe_params(k), ginv, d_ginv);

        // distinct parity types are orthogonal
        bool parity_ok = true;
        std::string d_parity;
        for (int tries = 0; tries < 6; ++tries) {
            int d = static_cast<int>(s.draw(1, std::max(1, degree)));
            Polynomial pp = random_homogeneous(s, N, m, d, true);
            Polynomial qq = random_homogeneous(s, N, m, d, true);
            auto parts_p = parity_split(pp, m);
            auto parts_q = parity_split(qq, m);
            for (const auto& [pa, pv] : parts_p)
                for (const auto& [qa, qv] : parts_q)
                    if (pa != qa && !pairing(ctx, pv, qv).is_zero()) {
                        parity_ok = false;
                        d_parity = "types " + describe_comp(pa) + " vs " + describe_comp(qa);
                    }
        }
        rep.add("distinct parity types pair to zero, " + describe_params(k), parity_ok, d_parity);

        // Gram matrices are hermitian
        bool gram_ok = true;
        for (int d = 0; d <= std::min(3, degree); ++d) {
            auto g = gram_matrix(ctx, d);
            for (std::size_t r = 0; r < g.size(); ++r)
                for (std::size_t c = 0; c < g.size(); ++c)
                    if (g[r][c] != g[c][r].conjugate()) gram_ok = false;
        }
        rep.add("Gram = conj(Gram)^T deg<=3, " + describe_params(k), gram_ok);
    }

    // positivity at nonnegative parameters
    RatSampler spos(seed + 1, 8);
    std::vector<Rational> free_vals;
    for (int t = 0; t < m / p; ++t) free_vals.push_back(spos.next(true));
    OperatorContext cpos(m, p, N, make_params(m, p, free_vals));
    bool pos_ok = true;
    std::string d_pos;
    for (int d = 0; d <= 3; ++d) {
        QMat g = gram_matrix_q(cpos, d);
        for (int lead = 1; lead <= g.rows; ++lead) {
            QMat minor(lead, lead);
            for (int r = 0; r < lead; ++r)
                for (int c = 0; c < lead; ++c) minor.at(r, c) = g.at(r, c);
            if (determinant(minor) <= 0) {
                pos_ok = false;
                d_pos = "degree " + std::to_string(d) + " minor " + std::to_string(lead);
            }
        }
    }
    rep.add("Gram minors positive at kappa >= 0, " + describe_params(cpos.kappa), pos_ok, d_pos);
    return rep;
}

SuiteReport suite_norms(int m, int p, int N, int bound, const std::vector<ParamTuple>& kappas) {
    SuiteReport rep;
    rep.suite = "norms";
    rep.kappa_degree_bound = bound;
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);
        JackContext jc(N, k.kappa[0], m);
        for (int da = 0; da <= std::min(bound, N * (m - 1)); ++da) {
            for (const auto& alpha : compositions_of(da, N)) {
                if (!is_standard_parity(alpha)) continue;
                bool in_range = true;
                for (int a : alpha)
                    if (a >= m) in_range = false;
                if (!in_range) continue;
                for (int dg = 0; da + m * dg <= bound; ++dg) {
                    for (const auto& gamma : compositions_of(dg, N)) {
                        Polynomial f =
                            Polynomial::monomial(N, m, alpha, Rational(1)) *
                            y_view(zeta(jc, gamma), m);
                        CycNumber brute = pairing(ctx, f, f);
                        Rational closed = norm_closed_form(ctx, alpha, gamma);
                        bool ok = brute.is_rational() && brute.as_rational() == closed;
                        rep.add("pairing = closed form, alpha=" + describe_comp(alpha) +
                                    " gamma=" + describe_comp(gamma) + ", " +
                                    describe_params(k),
                                ok,
                                ok ? "" : "brute=" + brute.to_display_string() +
                                              " closed=" + to_string(closed));
                    }
                }
            }
        }

        // (zeta_g, zeta_g) = E+ E- (zeta_{g+}, zeta_{g+})
        bool ratio_ok = true;
        std::string d_ratio;
        for (int dg = 0; m * dg <= bound; ++dg) {
            for (const auto& gamma : compositions_of(dg, N)) {
                Polynomial zg = y_view(zeta(jc, gamma), m);
                Composition gplus = sort_to_partition(gamma).first;
                Polynomial zp = y_view(zeta(jc, gplus), m);
                Rational ee = e_factor(N, k.kappa[0], gamma, +1) *
                              e_factor(N, k.kappa[0], gamma, -1);
                if (pairing(ctx, zg, zg) != pairing(ctx, zp, zp) * ee) {
                    ratio_ok = false;
                    d_ratio = "gamma=" + describe_comp(gamma);
                }
            }
        }
        rep.add("(z_g,z_g) = E+E- (z_g+,z_g+), " + describe_params(k), ratio_ok, d_ratio);

        // skew-invariant norm: (a_d, a_d) = N! E-(d^R) (zeta_d, zeta_d)
        Composition delta(N);
        for (int i = 0; i < N; ++i) delta[i] = N - 1 - i;
        Polynomial ad = y_view(a_delta(jc, delta), m);
        Polynomial zd = y_view(zeta(jc, delta), m);
        Composition deltaR(delta.rbegin(), delta.rend());
        Rational em = e_factor(N, k.kappa[0], deltaR, -1);
        bool skew_ok =
            pairing(ctx, ad, ad) ==
            pairing(ctx, zd, zd) * (Rational(factorial(N)) * em);
        Rational hr = hook(delta, Rational(1), k.kappa[0]) /
                      hook(delta, k.kappa[0] + 1, k.kappa[0]);
        skew_ok = skew_ok && em == hr;
        rep.add("(a_d,a_d) = N! E-(d^R)(z_d,z_d) and E-(d^R)=h(d,1)/h(d,k0+1), " +
                    describe_params(k),
                skew_ok);

        // orthogonality of distinct eigenfunctions sharing a standard parity type
        bool orth_ok = true;
        std::string d_orth;
        std::vector<ParityType> alphas{ParityType(N, 0)};
        if (m >= 2) {
            ParityType a1(N, 0);
            a1[0] = 1;
            alphas.push_back(a1);
        }
        for (const auto& alpha : alphas) {
            Polynomial xa = Polynomial::monomial(N, m, alpha, Rational(1));
            for (int dg = 1; m * dg <= bound + m; ++dg) {
                auto comps = compositions_of(dg, N);
                for (std::size_t a = 0; a < comps.size(); ++a)
                    for (std::size_t b = a + 1; b < comps.size(); ++b) {
                        Polynomial fa = xa * y_view(zeta(jc, comps[a]), m);
                        Polynomial fb = xa * y_view(zeta(jc, comps[b]), m);
                        if (!pairing(ctx, fa, fb).is_zero()) {
                            orth_ok = false;
                            d_orth = "alpha=" + describe_comp(alpha) + " " +
                                     describe_comp(comps[a]) + " vs " +
                                     describe_comp(comps[b]);
                        }
                    }
            }
        }
        rep.add("(x^a zeta_mu, x^a zeta_nu) = 0 for mu != nu, " + describe_params(k), orth_ok,
                d_orth);
    }
    return rep;
}

SuiteReport suite_eigenfunctions(int m, int p, int N, int gamma_bound,
                                 const std::vector<ParamTuple>& kappas) {
    SuiteReport rep;
    rep.suite = "eigen";
    rep.kappa_degree_bound = 2 * (m - 1) + m * gamma_bound;
    const int alpha_bound = 2 * (m - 1);
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);
        bool ok = true;
        std::string detail;
        int checked = 0;
        for (int da = 0; da <= alpha_bound && ok; ++da) {
            for (const auto& alpha : compositions_of(da, N)) {
                if (!is_standard_parity(alpha)) continue;
                bool in_range = true;
                for (int a : alpha)
                    if (a >= m) in_range = false;
                if (!in_range) continue;
                for (const auto& w : admissible_perms(alpha)) {
                    for (int dg = 0; dg <= gamma_bound && ok; ++dg) {
                        for (const auto& gamma : compositions_of(dg, N)) {
                            auto [f, eig] = eigenfunction(ctx, alpha, gamma, w);
                            for (int j = 1; j <= N; ++j) {
                                if (apply_U(ctx, j, f) != f.scale(eig[j - 1])) {
                                    ok = false;
                                    detail = "alpha=" + describe_comp(alpha) +
                                             " gamma=" + describe_comp(gamma) +
                                             " w=" + describe_comp(w) +
                                             " j=" + std::to_string(j) + " " +
                                             describe_params(k);
                                }
                            }
                            ++checked;
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
        }
        rep.add("U_{w(i)} w x^a zeta_g = stated eigenvalue (" + std::to_string(checked) +
                    " functions), " + describe_params(k),
                ok, detail);
    }
    return rep;
}

SuiteReport suite_derham(int m, int p, int N, int d2_degree, int euler_degree,
                         const std::vector<ParamTuple>& kappas) {
    SuiteReport rep;
    rep.suite = "derham";
    rep.kappa_degree_bound = 2;
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);
        GroupAlgebraOp z = build_z(ctx);

        bool d2_ok = true;
        std::string d_d2;
        for (int d = 0; d <= d2_degree && d2_ok; ++d)
            for (const auto& e : compositions_of(d, N)) {
                DifferentialForm f = DifferentialForm::from_polynomial(
                    Polynomial::monomial(N, m, e, Rational(1)));
                if (!d_k(ctx, d_k(ctx, f)).is_zero()) {
                    d2_ok = false;
                    d_d2 = "alpha=" + describe_comp(e) + " " + describe_params(k);
                    break;
                }
            }
        rep.add("d(k)^2 = 0 on K^0 deg<=" + std::to_string(d2_degree) + ", " +
                    describe_params(k),
                d2_ok, d_d2);

        bool dd2_ok = true;
        for (int d = 0; d <= 3 && dd2_ok; ++d)
            for (const auto& e : compositions_of(d, N)) {
                for (int i = 0; i < N && dd2_ok; ++i)
                    for (int j = i + 1; j < N; ++j) {
                        DifferentialForm f(N, m, 2);
                        f.add_term(e, {i, j}, CycNumber::one(m));
                        if (!koszul(koszul(f)).is_zero()) {
                            dd2_ok = false;
                            break;
                        }
                    }
            }
        rep.add("koszul^2 = 0 on K^2 deg<=3, " + describe_params(k), dd2_ok);

        // koszul d + d koszul = (l + |alpha|) + z(k), z applied diagonally
        bool euler_ok = true;
        std::string d_euler;
        for (int d = 0; d <= euler_degree && euler_ok; ++d) {
            for (const auto& e : compositions_of(d, N)) {
                for (int l = 0; l <= 1 && euler_ok; ++l) {
                    std::vector<std::vector<int>> subsets;
                    if (l == 0)
                        subsets.push_back({});
                    else
                        for (int i = 0; i < N; ++i) subsets.push_back({i});
                    for (const auto& sub : subsets) {
                        DifferentialForm f(N, m, l);
                        f.add_term(e, sub, CycNumber::one(m));
                        DifferentialForm lhs = euler_form(ctx, f);
                        DifferentialForm rhs =
                            f.scale(CycNumber::from_rational(Rational(l + d), m)) +
                            apply_diagonal(z, f);
                        if (lhs != rhs) {
                            euler_ok = false;
                            d_euler = "alpha=" + describe_comp(e) + " l=" + std::to_string(l);
                        }
                    }
                }
            }
        }
        rep.add("koszul d(k) + d(k) koszul = E(0) + z(k) on K^0+K^1 deg<=" +
                    std::to_string(euler_degree) + ", " + describe_params(k),
                euler_ok, d_euler);

        // E(k) on K^0 agrees with sum_i x_i T_i
        bool e0_ok = true;
        for (int d = 0; d <= euler_degree; ++d)
            for (const auto& e : compositions_of(d, N)) {
                Polynomial mono = Polynomial::monomial(N, m, e, Rational(1));
                DifferentialForm lhs =
                    euler_form(ctx, DifferentialForm::from_polynomial(mono));
                if (lhs != DifferentialForm::from_polynomial(euler_apply(ctx, mono)))
                    e0_ok = false;
            }
        rep.add("euler_form on K^0 = sum_i x_i T_i, " + describe_params(k), e0_ok);
    }
    return rep;
}

SuiteReport suite_intertwiner(int m, int p, int N, int max_degree,
                              const std::vector<ParamTuple>& kappas) {
    SuiteReport rep;
    rep.suite = "intertwiner";
    rep.kappa_degree_bound = max_degree;
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);
        IntertwinerTable table = build_intertwiner(ctx, max_degree);

        bool inter_ok = table.blocks[0] == QMat::identity(1);
        std::string d_inter;
        for (int d = 1; d <= max_degree && inter_ok; ++d)
            for (const auto& e : compositions_of(d, N)) {
                Polynomial mono = Polynomial::monomial(N, m, e, Rational(1));
                Polynomial v = intertwiner_apply(table, ctx, mono);
                for (int i = 1; i <= N; ++i) {
                    Polynomial lhs = apply_T(ctx, i, v);
                    Polynomial rhs = intertwiner_apply(table, ctx, mono.partial_derivative(i));
                    if (lhs != rhs) {
                        inter_ok = false;
                        d_inter = "alpha=" + describe_comp(e) + " i=" + std::to_string(i) + " " +
                                  describe_params(k);
                    }
                }
            }
        rep.add("T_i V = V d_i to degree " + std::to_string(max_degree) + ", " +
                    describe_params(k),
                inter_ok, d_inter);

        bool invert_ok = true;
        for (int d = 0; d <= max_degree; ++d)
            if (!invertible(table.blocks[d])) invert_ok = false;
        rep.add("V blocks invertible, " + describe_params(k), invert_ok);

        bool unique_ok = true;
        IntertwinerTable shuffled = build_intertwiner(ctx, max_degree, 12345);
        for (int d = 0; d <= max_degree; ++d)
            if (!(shuffled.blocks[d] == table.blocks[d])) unique_ok = false;
        rep.add("rebuild with permuted order gives the same table, " + describe_params(k),
                unique_ok);
    }

    // kappa = 0 gives the identity at every degree
    OperatorContext czero(m, p, N,
                          make_params(m, p, std::vector<Rational>(m / p, Rational(0))));
    IntertwinerTable id_table = build_intertwiner(czero, max_degree);
    bool id_ok = true;
    for (int d = 0; d <= max_degree; ++d)
        if (!(id_table.blocks[d] == QMat::identity(id_table.blocks[d].rows))) id_ok = false;
    rep.add("V = identity at kappa = 0", id_ok);

    // a K_1 witness parameter fails at the predicted degree; for m = 1 the
    // diagonal family is empty and K_1 has no witnesses to test
    if (m >= 2 && (N >= 2 || m / p >= 2)) {
        std::vector<Rational> free_vals(m / p, Rational(0));
        if (N >= 2 && m / p >= 2) {
            free_vals[0] = rat(1, 3);
            free_vals[1] = rat(-1, m) - Rational(N - 1) * free_vals[0];
        } else if (N >= 2) {
            free_vals[0] = rat(-1, m * (N - 1));
        } else {
            free_vals[1 % free_vals.size()] = rat(-1, m); // N = 1, needs m/p >= 2
        }
        OperatorContext cw(m, p, N, make_params(m, p, free_vals));
        auto predicted = min_radical_degree(cw, max_degree);
        bool fail_ok = false;
        std::string d_fail = "no failure observed";
        try {
            build_intertwiner(cw, max_degree);
        } catch (const SingularParameter& e) {
            fail_ok = predicted && e.degree == *predicted;
            d_fail = "failed at degree " + std::to_string(e.degree) + ", predicted " +
                     (predicted ? std::to_string(*predicted) : std::string("none"));
        }
        rep.add("build fails at a K_1 witness at the predicted degree, " +
                    describe_params(cw.kappa),
                fail_ok, d_fail);
    }
    return rep;
}

SuiteReport suite_singular(int m, int p, int N, int oracle_degree, unsigned long seed) {
    SuiteReport rep;
    rep.suite = "singular";
    rep.kappa_degree_bound = oracle_degree;
    RatSampler s(seed, 24);

    // generic parameters: no degeneracy
    bool generic_ok = true;
    std::string d_generic;
    for (int trial = 0; trial < 3; ++trial) {
        ParamTuple k = sample_params(m, p, N, s);
        OperatorContext ctx(m, p, N, k);
        for (int c : gram_corank_oracle(ctx, oracle_degree))
            if (c != 0) {
                generic_ok = false;
                d_generic = describe_params(k);
            }
        if (!radical_basis(ctx, std::min(3, oracle_degree)).empty()) {
            generic_ok = false;
            d_generic = describe_params(k) + " (radical nonempty)";
        }
    }
    rep.add("generic kappa: corank 0 and empty radical to degree " +
                std::to_string(oracle_degree),
            generic_ok, d_generic);

    // K_1 witnesses produce degeneracy at the degree predicted by the norms
    bool witness_ok = true;
    std::string d_witness;
    if (m / p >= 2) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Rational> free_vals(m / p, Rational(0));
            free_vals[0] = s.next(true);
            long n_pick = N >= 2 ? s.draw(0, 1) : 0;
            long r_pick = s.draw(0, 1);
            free_vals[1] =
                -rat(1, m) - Rational(n_pick) * free_vals[0] - Rational(r_pick);
            ParamTuple k = make_params(m, p, free_vals);
            OperatorContext ctx(m, p, N, k);
            if (!in_K1(k, N)) {
                witness_ok = false;
                d_witness = describe_params(k) + " not detected by in_K1";
                continue;
            }
            auto predicted = min_radical_degree(ctx, oracle_degree);
            if (!predicted) continue; // witness eigenfunction above the bound
            auto coranks = gram_corank_oracle(ctx, *predicted);
            if (coranks[*predicted - 1] < 1) {
                witness_ok = false;
                d_witness = describe_params(k) + " corank 0 at predicted degree " +
                            std::to_string(*predicted);
            }
            if (radical_basis(ctx, *predicted).empty()) {
                witness_ok = false;
                d_witness = describe_params(k) + " radical empty at predicted degree";
            }
        }
    }
    rep.add("K_1 witnesses: oracle corank >= 1 at the predicted degree", witness_ok, d_witness);

    // radical vectors generate an ideal orthogonal to everything
    bool ideal_ok = true;
    if (m / p >= 2) {
        std::vector<Rational> free_vals(m / p, Rational(0));
        free_vals[0] = rat(1, 3);
        free_vals[1] = -rat(1, m) - Rational(N - 1) * free_vals[0];
        OperatorContext ctx(m, p, N, make_params(m, p, free_vals));
        auto rad = radical_basis(ctx, 1);
        for (const auto& q : rad) {
            for (int i = 1; i <= N; ++i)
                if (!apply_T(ctx, i, q).is_zero()) ideal_ok = false;
            for (int j = 1; j <= N; ++j) {
                Polynomial xq = Polynomial::x_power(N, m, j, 1) * q;
                for (const auto& e : compositions_of(xq.degree(), N)) {
                    Polynomial mono = Polynomial::monomial(N, m, e, Rational(1));
                    if (!pairing(ctx, mono, xq).is_zero()) ideal_ok = false;
                }
            }
        }
        if (rad.empty()) ideal_ok = false;
    }
    rep.add("radical vectors are T-killed and pair to zero inside the ideal", ideal_ok);

    return rep;
}

SuiteReport suite_shifts(int m, int p, int N, const std::vector<ParamTuple>& kappas,
                         unsigned long seed) {
    SuiteReport rep;
    rep.suite = "shifts";
    rep.kappa_degree_bound = 3 * m;
    RatSampler s(seed, 10);
    const int q = m / p;
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);

        if (p == 1) {
            bool ok = true;
            std::string detail;
            for (int t = 1; t <= m - 1; ++t) {
                int gdeg = std::max(0, (3 * m - t * N) / m);
                Polynomial g = random_homogeneous(s, N, m, std::min(gdeg, 2), false);
                if (!verify_shift_cyclic_full(ctx, t, g)) {
                    ok = false;
                    detail = "t=" + std::to_string(t) + " g=" + g.to_text("y") + " " +
                             describe_params(k);
                }
            }
            rep.add("T(k)^m x^{t1} g = x^{t1} T(k')^m g, " + describe_params(k), ok, detail);
        }

        if (q >= 2) {
            bool ok = true;
            std::string detail;
            for (int t = 1; t <= q - 1; ++t)
                for (int sp = 0; sp <= p - 1; ++sp) {
                    int xdeg = (t + sp * q) * N;
                    int gdeg = std::max(0, (3 * m - xdeg) / m);
                    Polynomial g = random_homogeneous(s, N, m, std::min(gdeg, 2), false);
                    if (!verify_shift_cyclic_p(ctx, t, sp, g)) {
                        ok = false;
                        detail = "t=" + std::to_string(t) + " s=" + std::to_string(sp) + " g=" +
                                 g.to_text("y") + " " + describe_params(k);
                    }
                }
            rep.add("T(k)^{m/p} x^{(t+sm/p)1} g = x^{t1} T(k')^{m/p} x^{(sm/p)1} g, " +
                        describe_params(k),
                    ok, detail);
        }

        {
            // symmetric f, g built from symmetrized monomials
            auto symmetrize = [&](const Composition& mu) {
                Polynomial out(N, m);
                for (const auto& w : all_permutations(N)) {
                    Polynomial t = act_perm(w, Polynomial::monomial(N, m, mu, Rational(1)));
                    out += t;
                }
                return out;
            };
            bool ok = true;
            std::string detail;
            for (int trial = 0; trial < 3; ++trial) {
                auto pool1 = compositions_of(static_cast<int>(s.draw(0, 2)), N);
                auto pool2 = compositions_of(static_cast<int>(s.draw(0, 1)), N);
                Composition mu1 = pool1[s.draw(0, static_cast<long>(pool1.size()) - 1)];
                Composition mu2 = pool2[s.draw(0, static_cast<long>(pool2.size()) - 1)];
                Polynomial f = symmetrize(mu1).scale(s.next(true));
                Polynomial g = symmetrize(mu2).scale(s.next());
                if (!verify_shift_symmetric(ctx, f, g)) {
                    ok = false;
                    detail = "f=" + f.to_text("y") + " g=" + g.to_text("y") + " " +
                             describe_params(k);
                }
            }
            rep.add("f(T(k)) a_d g = a_d f(T(k')) g, " + describe_params(k), ok, detail);
        }

        {
            // invariants: combinations of e_r(y) and x^{(m/p)1}
            auto elementary = [&](int r) {
                Polynomial out(N, m);
                Composition mu(N, 0);
                for (int i = 0; i < r; ++i) mu[i] = 1;
                for (const auto& e : compositions_of(r, N)) {
                    bool zeroone = true;
                    for (int v : e)
                        if (v > 1) zeroone = false;
                    if (zeroone) out += Polynomial::monomial(N, m, e, Rational(1));
                }
                return y_view(out, m);
            };
            Polynomial full = Polynomial::monomial(N, m, Composition(N, q), Rational(1));
            std::vector<Polynomial> gens;
            for (int r = 1; r <= N; ++r) gens.push_back(elementary(r));
            gens.push_back(full);
            bool ok = true;
            std::string detail;
            for (int trial = 0; trial < 3; ++trial) {
                const Polynomial& pg = gens[s.draw(0, static_cast<long>(gens.size()) - 1)];
                const Polynomial& qg = gens[s.draw(0, static_cast<long>(gens.size()) - 1)];
                Polynomial pi_poly = pg.scale(s.next(true));
                Polynomial qi_poly = qg.scale(s.next(true));
                if (!verify_shift_corollary(ctx, pi_poly, qi_poly)) {
                    ok = false;
                    detail = "p=" + pi_poly.to_text() + " q=" + qi_poly.to_text() + " " +
                             describe_params(k);
                }
            }
            rep.add("(pi p, pi q)_k = (pi,pi)_k (p,q)_{k+1}, " + describe_params(k), ok, detail);
        }
    }
    return rep;
}

SuiteReport suite_hanlon(int m, int p, int N, const std::vector<ParamTuple>& kappas) {
    SuiteReport rep;
    rep.suite = "hanlon";
    rep.kappa_degree_bound = m * N * (N - 1) / 2 + (m - 1) * N;
    for (const auto& k : kappas) {
        OperatorContext ctx(m, p, N, k);
        bool ok = true;
        std::string detail;
        for (int t = 0; t <= m - 1; ++t) {
            auto [closed, f] = hanlon_norm(ctx, t);
            CycNumber brute = pairing(ctx, f, f);
            if (!brute.is_rational() || brute.as_rational() != closed) {
                ok = false;
                detail = "t=" + std::to_string(t) + " " + describe_params(k);
            }
        }
        rep.add("(f,f)_k matches the closed form for all t, " + describe_params(k), ok, detail);
    }
    return rep;
}

SuiteReport suite_zspectrum(int m, int p, int N, int max_degree) {
    SuiteReport rep;
    rep.suite = "zspec";
    rep.kappa_degree_bound = 1;
    OperatorContext ctx(m, p, N,
                        make_params(m, p, std::vector<Rational>(m / p, Rational(0))));
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<ZSpectrumLine> lines;
        bool integral_ok = true;
        std::string detail;
        try {
            lines = z_spectrum(ctx, d);
        } catch (const InvariantViolation& e) {
            integral_ok = false;
            detail = e.what();
        }
        int dim = static_cast<int>(compositions_of(d, N).size());
        int total = 0;
        for (const auto& line : lines) {
            total += line.multiplicity;
            for (const auto& c : line.coeffs)
                if (!is_integer(c) || c < 0) integral_ok = false;
        }
        if (total != dim) integral_ok = false;
        rep.add("degree " + std::to_string(d) +
                    ": unit-tuple eigenvalues are nonnegative integers",
                integral_ok, detail);

        // zero form appears exactly on the invariants
        int zero_mult = 0;
        for (const auto& line : lines) {
            bool all_zero = true;
            for (const auto& c : line.coeffs)
                if (c != 0) all_zero = false;
            if (all_zero) zero_mult += line.multiplicity;
        }
        int inv_dim = invariant_dimension(m, p, N, d);
        rep.add("degree " + std::to_string(d) + ": zero-form multiplicity " +
                    std::to_string(zero_mult) + " equals invariant dimension " +
                    std::to_string(inv_dim),
                zero_mult == inv_dim);

        if (d == 0) {
            rep.add("degree 0: the spectrum is exactly the zero form",
                    lines.size() == 1 && zero_mult == 1);
        } else if (inv_dim < dim) {
            bool has_nonzero = false;
            for (const auto& line : lines) {
                for (const auto& c : line.coeffs)
                    if (c != 0) has_nonzero = true;
            }
            rep.add("degree " + std::to_string(d) +
                        ": non-invariants carry a nonzero form",
                    has_nonzero);
        }
    }
    return rep;
}

} // namespace dunkl
