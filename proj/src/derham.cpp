#include "dunkl/derham.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dunkl/errors.hpp"

namespace dunkl {

DifferentialForm DifferentialForm::from_polynomial(const Polynomial& p) {
    DifferentialForm w(p.nvars(), p.conductor(), 0);
    for (const auto& [e, c] : p.terms()) w.add_term(e, {}, c);
    return w;
}

int DifferentialForm::poly_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, comp_degree(key.first));
    return d;
}

void DifferentialForm::add_term(const Composition& exp, const std::vector<int>& subset,
                                const CycNumber& c) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw HypothesisViolation("form exponent length mismatch");
    if (static_cast<int>(subset.size()) != form_degree_)
        throw HypothesisViolation("form subset size must equal the form degree");
    for (std::size_t k = 0; k + 1 < subset.size(); ++k)
        if (subset[k] >= subset[k + 1])
            throw HypothesisViolation("form subset must be strictly increasing");
    if (!subset.empty() && (subset.front() < 0 || subset.back() >= nvars_))
        throw HypothesisViolation("form subset index out of range");
    if (c.conductor() != conductor_) throw ConductorMismatch("form coefficient conductor");
    Key key{exp, subset};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DifferentialForm::add_term_unsorted(const Composition& exp, std::vector<int> subset,
                                         const CycNumber& c) {
    int sign = 1;
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            if (subset[a] == subset[b]) return; // repeated dx vanishes
            if (subset[a] > subset[b]) sign = -sign;
        }
    std::sort(subset.begin(), subset.end());
    add_term(exp, subset, sign > 0 ? c : -c);
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    DifferentialForm out = *this;
    out += o;
    return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    DifferentialForm out = *this;
    out += o.scale(-CycNumber::one(conductor_));
    return out;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
    if (conductor_ != o.conductor_) throw ConductorMismatch("form conductor mismatch");
    // a zero form is degree-agnostic
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (nvars_ != o.nvars_ || form_degree_ != o.form_degree_)
        throw HypothesisViolation("form shape mismatch");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

DifferentialForm DifferentialForm::scale(const CycNumber& c) const {
    DifferentialForm out(nvars_, conductor_, form_degree_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v * c);
    return out;
}

bool DifferentialForm::operator==(const DifferentialForm& o) const {
    if (nvars_ != o.nvars_ || conductor_ != o.conductor_) return false;
    if (is_zero() && o.is_zero()) return true; // zero is degree-agnostic
    return form_degree_ == o.form_degree_ && terms_ == o.terms_;
}

Polynomial DifferentialForm::as_polynomial() const {
    if (form_degree_ != 0) throw HypothesisViolation("form degree must be 0");
    Polynomial p(nvars_, conductor_);
    for (const auto& [key, c] : terms_) p.add_term(key.first, c);
    return p;
}

DifferentialForm d_k(const OperatorContext& ctx, const DifferentialForm& w) {
    DifferentialForm out(w.nvars(), w.conductor(), w.form_degree() + 1);
    for (const auto& [key, c] : w.terms()) {
        const auto& [exp, subset] = key;
        Polynomial mono = Polynomial::monomial(ctx.N, ctx.m, exp, c);
        for (int i = 1; i <= ctx.N; ++i) {
            // skip dx_i ^ dx_S = 0 early
            if (std::binary_search(subset.begin(), subset.end(), i - 1)) continue;
            Polynomial ti = apply_T(ctx, i, mono);
            if (ti.is_zero()) continue;
            int before = static_cast<int>(
                std::lower_bound(subset.begin(), subset.end(), i - 1) - subset.begin());
            int sign = before % 2 == 0 ? 1 : -1;
            std::vector<int> s2 = subset;
            s2.insert(s2.begin() + before, i - 1);
            for (const auto& [e2, c2] : ti.terms())
                out.add_term(e2, s2, sign > 0 ? c2 : -c2);
        }
    }
    return out;
}

DifferentialForm koszul(const DifferentialForm& w) {
    DifferentialForm out(w.nvars(), w.conductor(), std::max(0, w.form_degree() - 1));
    if (w.form_degree() == 0) return out;
    for (const auto& [key, c] : w.terms()) {
        const auto& [exp, subset] = key;
        for (std::size_t r = 0; r < subset.size(); ++r) {
            Composition e2 = exp;
            e2[subset[r]] += 1;
            std::vector<int> s2 = subset;
            s2.erase(s2.begin() + static_cast<long>(r));
            out.add_term(e2, s2, r % 2 == 0 ? c : -c);
        }
    }
    return out;
}

DifferentialForm euler_form(const OperatorContext& ctx, const DifferentialForm& w) {
    return koszul(d_k(ctx, w)) + d_k(ctx, koszul(w));
}

DifferentialForm act_diagonal(const GroupElement& g, const DifferentialForm& w) {
    const int m = w.conductor();
    DifferentialForm out(w.nvars(), m, w.form_degree());
    for (const auto& [key, c] : w.terms()) {
        const auto& [exp, subset] = key;
        long phase = 0;
        for (int i = 0; i < w.nvars(); ++i) phase += static_cast<long>(g.phases[i]) * exp[i];
        for (int s : subset) phase += g.phases[s];
        std::vector<int> s2;
        s2.reserve(subset.size());
        for (int s : subset) s2.push_back(g.perm[s]);
        out.add_term_unsorted(apply_perm(g.perm, exp), std::move(s2),
                              c * CycNumber::root_of_unity_power(m, phase));
    }
    return out;
}

DifferentialForm apply_diagonal(const GroupAlgebraOp& op, const DifferentialForm& w) {
    DifferentialForm out(w.nvars(), w.conductor(), w.form_degree());
    for (const auto& [c, g] : op.terms) out += act_diagonal(g, w).scale(c);
    return out;
}

namespace {

struct K1Basis {
    std::vector<Composition> p_basis;                  // monomials of P_{d-1}
    std::vector<std::pair<int, int>> keys;             // (monomial index, dx index)
    std::map<std::pair<Composition, int>, int> lookup; // (exponent, dx) -> position
};

K1Basis k1_basis(const OperatorContext& ctx, int poly_degree) {
    K1Basis b;
    b.p_basis = compositions_of(poly_degree, ctx.N);
    for (int e = 0; e < static_cast<int>(b.p_basis.size()); ++e)
        for (int i = 0; i < ctx.N; ++i) {
            b.lookup.emplace(std::make_pair(b.p_basis[e], i),
                             static_cast<int>(b.keys.size()));
            b.keys.emplace_back(e, i);
        }
    return b;
}

std::vector<Rational> form_to_coords(const DifferentialForm& w, const K1Basis& b) {
    std::vector<Rational> v(b.keys.size(), Rational(0));
    for (const auto& [key, c] : w.terms()) {
        auto it = b.lookup.find({key.first, key.second.at(0)});
        if (it == b.lookup.end()) throw InvariantViolation("form leaves the expected block");
        v[it->second] = c.as_rational();
    }
    return v;
}

} // namespace

IntertwinerTable build_intertwiner(const OperatorContext& ctx, int max_degree,
                                   unsigned long shuffle_seed) {
    IntertwinerTable table;
    table.max_degree = max_degree;
    table.blocks.resize(max_degree + 1);
    table.blocks[0] = QMat::identity(1);
    std::mt19937_64 rng(shuffle_seed);

    std::vector<Composition> prev_basis = compositions_of(0, ctx.N);
    for (int d = 1; d <= max_degree; ++d) {
        const auto basis = compositions_of(d, ctx.N);
        const int n = static_cast<int>(basis.size());
        K1Basis k1 = k1_basis(ctx, d - 1);
        const int dim1 = static_cast<int>(k1.keys.size());

        // E(k) on K^1_{d-1}
        QMat emat(dim1, dim1);
        for (int col = 0; col < dim1; ++col) {
            auto [eidx, i] = k1.keys[col];
            DifferentialForm f(ctx.N, ctx.m, 1);
            f.add_term(k1.p_basis[eidx], {i}, CycNumber::one(ctx.m));
            DifferentialForm ef = euler_form(ctx, f);
            auto coords = form_to_coords(ef, k1);
            for (int r = 0; r < dim1; ++r) emat.at(r, col) = coords[r];
        }
        QMat einv;
        try {
            einv = inverse(emat);
        } catch (const SingularParameter&) {
            throw SingularParameter(d);
        }

        std::map<Composition, int> prev_index;
        for (int c = 0; c < static_cast<int>(prev_basis.size()); ++c)
            prev_index.emplace(prev_basis[c], c);

        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        if (shuffle_seed != 0) std::shuffle(order.begin(), order.end(), rng);

        QMat block(n, n);
        std::map<Composition, int> index;
        for (int c = 0; c < n; ++c) index.emplace(basis[c], c);
        for (int col : order) {
            const Composition& alpha = basis[col];
            // omega = V(d(0) x^alpha) = sum_i alpha_i V(x^{alpha - e_i}) dx_i
            std::vector<Rational> omega(dim1, Rational(0));
            for (int i = 0; i < ctx.N; ++i) {
                if (alpha[i] == 0) continue;
                Composition beta = alpha;
                beta[i] -= 1;
                int bcol = prev_index.at(beta);
                for (int r = 0; r < static_cast<int>(prev_basis.size()); ++r) {
                    const Rational& v = table.blocks[d - 1].at(r, bcol);
                    if (v == 0) continue;
                    omega[k1.lookup.at({prev_basis[r], i})] += Rational(alpha[i]) * v;
                }
            }
            std::vector<Rational> zeta_coords = mat_vec(einv, omega);
            // V(x^alpha) = koszul(zeta)
            DifferentialForm zf(ctx.N, ctx.m, 1);
            for (int r = 0; r < dim1; ++r) {
                if (zeta_coords[r] == 0) continue;
                auto [eidx, i] = k1.keys[r];
                zf.add_term(k1.p_basis[eidx], {i},
                            CycNumber::from_rational(zeta_coords[r], ctx.m));
            }
            Polynomial v = koszul(zf).as_polynomial();
            for (const auto& [e, c] : v.terms()) block.at(index.at(e), col) = c.as_rational();
        }
        table.blocks[d] = std::move(block);
        prev_basis = basis;
    }
    return table;
}

Polynomial intertwiner_apply(const IntertwinerTable& table, const OperatorContext& ctx,
                             const Polynomial& p) {
    Polynomial out(ctx.N, ctx.m);
    for (const auto& [d, part] : p.homogeneous_components()) {
        if (d > table.max_degree)
            throw HypothesisViolation("intertwiner table does not cover degree " +
                                      std::to_string(d));
        const auto basis = compositions_of(d, ctx.N);
        std::map<Composition, int> index;
        for (int c = 0; c < static_cast<int>(basis.size()); ++c) index.emplace(basis[c], c);
        const QMat& block = table.blocks[d];
        for (const auto& [e, c] : part.terms()) {
            int col = index.at(e);
            for (int r = 0; r < block.rows; ++r) {
                const Rational& v = block.at(r, col);
                if (v != 0) out.add_term(basis[r], c * v);
            }
        }
    }
    return out;
}

std::vector<ZSpectrumLine> z_spectrum(const OperatorContext& ctx, int degree) {
    if (degree < 0) throw HypothesisViolation("z_spectrum: degree must be nonnegative");
    const int nfree = ctx.m / ctx.p;
    const auto basis = compositions_of(degree, ctx.N);
    const int dim = static_cast<int>(basis.size());

    // matrix of z(k) = E(k) - E(0) at each unit parameter tuple
    std::vector<QMat> mats;
    for (int u = 0; u < nfree; ++u) {
        std::vector<Rational> free_vals(nfree, Rational(0));
        free_vals[u] = 1;
        OperatorContext cu(ctx.m, ctx.p, ctx.N, make_params(ctx.m, ctx.p, free_vals));
        QMat mu = operator_matrix_on_basis(basis, ctx.N, ctx.m, [&](const Polynomial& q) {
            return euler_apply(cu, q);
        });
        for (int r = 0; r < dim; ++r) mu.at(r, r) -= degree;
        mats.push_back(std::move(mu));
    }

    // integer eigenvalues per unit tuple; z(k) is central so each matrix is
    // semisimple and geometric multiplicities account for the whole space
    const int bound = ctx.m * ctx.N * (ctx.N - 1) + ctx.m * ctx.N + 1;
    std::vector<std::vector<int>> eigenvalues(nfree);
    for (int u = 0; u < nfree; ++u) {
        int total = 0;
        for (int s = 0; s <= bound && total < dim; ++s) {
            QMat shifted = mats[u];
            for (int r = 0; r < dim; ++r) shifted.at(r, r) -= s;
            int def = corank(shifted);
            if (def > 0) {
                eigenvalues[u].push_back(s);
                total += def;
            }
        }
        if (total != dim)
            throw InvariantViolation(
                "z_spectrum: spectrum at a unit tuple is not a list of nonnegative integers");
    }

    // joint eigenspaces over the product of candidate eigenvalue lists
    std::vector<ZSpectrumLine> out;
    std::vector<std::size_t> pick(nfree, 0);
    int total = 0;
    while (true) {
        QMat stacked(nfree * dim, dim);
        for (int u = 0; u < nfree; ++u) {
            int s = eigenvalues[u][pick[u]];
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) stacked.at(u * dim + r, c) = mats[u].at(r, c);
                stacked.at(u * dim + r, r) -= s;
            }
        }
        int mult = dim - rank(stacked);
        if (mult > 0) {
            ZSpectrumLine line;
            for (int u = 0; u < nfree; ++u)
                line.coeffs.push_back(Rational(eigenvalues[u][pick[u]]));
            line.multiplicity = mult;
            out.push_back(std::move(line));
            total += mult;
        }
        int pos = nfree - 1;
        while (pos >= 0) {
            if (++pick[pos] < eigenvalues[pos].size()) break;
            pick[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    if (total != dim)
        throw InvariantViolation("z_spectrum: joint eigenspaces do not fill the block");
    std::sort(out.begin(), out.end(), [](const ZSpectrumLine& a, const ZSpectrumLine& b) {
        return a.coeffs < b.coeffs;
    });
    return out;
}

Rational z_line_value(const ZSpectrumLine& line, const ParamTuple& kappa) {
    const int nfree = kappa.m / kappa.p;
    if (static_cast<int>(line.coeffs.size()) != nfree)
        throw HypothesisViolation("z_line_value: parameter count mismatch");
    auto free_vals = kappa.free_values();
    Rational out = 0;
    for (int u = 0; u < nfree; ++u) out += line.coeffs[u] * free_vals[u];
    return out;
}

} // namespace dunkl
