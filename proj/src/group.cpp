#include "dunkl/group.hpp"

#include <set>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

std::string GroupElement::to_text() const {
    std::ostringstream os;
    os << "perm=[";
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i] + 1;
    os << "] phases=[";
    for (std::size_t i = 0; i < phases.size(); ++i) os << (i ? "," : "") << phases[i];
    os << "]";
    return os.str();
}

GroupElement identity_element(int N) { return {identity_perm(N), std::vector<int>(N, 0)}; }

GroupElement transposition(int N, int i, int j, int m) {
    (void)m;
    if (i == j || i < 1 || j < 1 || i > N || j > N)
        throw HypothesisViolation("transposition needs distinct indices in 1..N");
    GroupElement g = identity_element(N);
    std::swap(g.perm[i - 1], g.perm[j - 1]);
    return g;
}

GroupElement tau_power(int N, int i, long s, int m) {
    if (i < 1 || i > N) throw HypothesisViolation("tau index out of range");
    GroupElement g = identity_element(N);
    long r = s % m;
    if (r < 0) r += m;
    g.phases[i - 1] = static_cast<int>(r);
    return g;
}

GroupElement from_permutation(const Permutation& w) {
    return {w, std::vector<int>(w.size(), 0)};
}

GroupElement compose(const GroupElement& g, const GroupElement& h, int m) {
    const int N = g.n();
    if (h.n() != N) throw HypothesisViolation("group element size mismatch");
    GroupElement out;
    out.perm = compose_perm(g.perm, h.perm);
    out.phases.resize(N);
    for (int j = 0; j < N; ++j) {
        int v = (h.phases[j] + g.phases[h.perm[j]]) % m;
        if (v < 0) v += m;
        out.phases[j] = v;
    }
    return out;
}

GroupElement inverse(const GroupElement& g, int m) {
    const int N = g.n();
    GroupElement out;
    out.perm = inverse_perm(g.perm);
    out.phases.resize(N);
    for (int j = 0; j < N; ++j) {
        int v = (-g.phases[out.perm[j]]) % m;
        if (v < 0) v += m;
        out.phases[j] = v;
    }
    return out;
}

bool in_gmpn(const GroupElement& g, int m, int p) {
    long sum = 0;
    for (int v : g.phases) sum += v;
    (void)m;
    return sum % p == 0;
}

Polynomial act(const GroupElement& g, const Polynomial& p) {
    if (g.n() != p.nvars()) throw HypothesisViolation("group element/polynomial size mismatch");
    const int m = p.conductor();
    Polynomial out(p.nvars(), m);
    for (const auto& [e, c] : p.terms()) {
        long phase = 0;
        for (int i = 0; i < p.nvars(); ++i) phase += static_cast<long>(g.phases[i]) * e[i];
        out.add_term(apply_perm(g.perm, e), c * CycNumber::root_of_unity_power(m, phase));
    }
    return out;
}

Polynomial act_perm(const Permutation& w, const Polynomial& p) {
    return act(from_permutation(w), p);
}

GroupElement period2_reflection(int N, int i, int j, long s, int m) {
    GroupElement t = transposition(N, i, j, m);
    GroupElement a = tau_power(N, i, s, m);
    GroupElement ai = tau_power(N, i, -s, m);
    return compose(ai, compose(t, a, m), m);
}

std::vector<GroupElement> reflections(int m, int p, int N) {
    if (p < 1 || m % p != 0) throw HypothesisViolation("reflections: p must divide m");
    std::vector<GroupElement> out;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int s = 0; s < m; ++s) out.push_back(period2_reflection(N, i, j, s, m));
    for (int i = 1; i <= N; ++i)
        for (int s = 1; s <= m / p - 1; ++s) out.push_back(tau_power(N, i, s * p, m));
    return out;
}

std::vector<GroupElement> enumerate_group(int m, int p, int N) {
    std::set<GroupElement> seen;
    std::vector<GroupElement> frontier{identity_element(N)};
    seen.insert(frontier.front());
    const auto gens = reflections(m, p, N);
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& g : frontier) {
            for (const auto& r : gens) {
                GroupElement h = compose(r, g, m);
                if (seen.insert(h).second) next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Polynomial projection_pi(int m, int j, int s, const Polynomial& p) {
    if (j < 1 || j > p.nvars()) throw HypothesisViolation("projection index out of range");
    Polynomial out(p.nvars(), p.conductor());
    int r = s % m;
    if (r < 0) r += m;
    for (const auto& [e, c] : p.terms())
        if (e[j - 1] % m == r) out.add_term(e, c);
    return out;
}

Polynomial lambda_apply(int m, int r, int t, const Polynomial& p) {
    if (r == t) throw HypothesisViolation("lambda_apply needs r != t");
    if (r < 1 || t < 1 || r > p.nvars() || t > p.nvars())
        throw HypothesisViolation("lambda_apply index out of range");
    Polynomial out(p.nvars(), p.conductor());
    for (const auto& [e, c] : p.terms()) {
        if ((e[r - 1] - e[t - 1]) % m != 0) continue;
        Composition swapped = e;
        std::swap(swapped[r - 1], swapped[t - 1]);
        out.add_term(swapped, c * Rational(m));
    }
    return out;
}

Polynomial GroupAlgebraOp::apply(const Polynomial& p) const {
    Polynomial out(p.nvars(), p.conductor());
    for (const auto& [c, g] : terms) out += act(g, p).scale(c);
    return out;
}

} // namespace dunkl
