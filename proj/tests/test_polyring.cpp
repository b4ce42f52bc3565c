#include <doctest.h>

#include <set>

#include "dunkl/polynomial.hpp"
#include "dunkl/sampling.hpp"

using namespace dunkl;

namespace {

Polynomial random_poly(RatSampler& s, int nvars, int m, int maxdeg) {
    Polynomial out(nvars, m);
    for (int t = 0; t < 5; ++t) {
        Composition e(nvars);
        for (auto& v : e) v = static_cast<int>(s.draw(0, maxdeg));
        out += Polynomial::monomial(nvars, m, e, s.next());
    }
    return out;
}

} // namespace

TEST_CASE("basic polynomial calculus") {
    // d/dx_1 (x_1^2 x_2) = 2 x_1 x_2
    Polynomial p = parse_polynomial("x1^2 x2", 2, 2);
    CHECK(p.partial_derivative(1) == parse_polynomial("2 x1 x2", 2, 2));
    // constant term
    CHECK(parse_polynomial("3 + x1", 2, 2).evaluate_at_zero() ==
          CycNumber::from_rational(rat(3), 2));
    // conjugation acts on coefficients only
    int m = 5;
    Polynomial q = Polynomial::x_power(2, m, 1, 1).scale(CycNumber::root_of_unity_power(m, 1));
    CHECK(q.conjugate_coefficients() ==
          Polynomial::x_power(2, m, 1, 1).scale(CycNumber::root_of_unity_power(m, m - 1)));
}

TEST_CASE("ring laws on random polynomials") {
    RatSampler s(3, 7);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial a = random_poly(s, 2, 3, 3);
        Polynomial b = random_poly(s, 2, 3, 3);
        Polynomial c = random_poly(s, 2, 3, 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        CHECK((a * b) * c == a * (b * c));
    }
    CHECK_THROWS_AS(random_poly(s, 2, 3, 2) + random_poly(s, 3, 3, 2), HypothesisViolation);
}

TEST_CASE("degree bookkeeping") {
    CHECK(Polynomial::zero(2, 2).degree() == -1);
    Polynomial p = parse_polynomial("x1^3 + x2", 2, 2);
    CHECK(p.degree() == 3);
    CHECK(!p.is_homogeneous());
    auto parts = p.homogeneous_components();
    CHECK(parts.size() == 2);
    CHECK(parts.at(1) == parse_polynomial("x2", 2, 2));
    CHECK(parts.at(3) == parse_polynomial("x1^3", 2, 2));
}

TEST_CASE("dominance order examples") {
    CHECK(dominance_greater({2, 0}, {0, 2}));
    CHECK(dominance_greater({0, 2}, {1, 1}));
    CHECK(!dominance_greater({1, 1}, {1, 1}));
    CHECK(!dominance_greater({1, 0}, {0, 2}));  // degree mismatch
    CHECK(!dominance_greater({1, 0, 0}, {0, 1})); // length mismatch
}

TEST_CASE("dominance is a strict partial order (exhaustive, deg <= 6, N <= 3)") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 6; ++d) {
            auto comps = compositions_of(d, n);
            for (const auto& a : comps) {
                CHECK(!dominance_greater(a, a));
                for (const auto& b : comps) {
                    if (dominance_greater(a, b)) CHECK(!dominance_greater(b, a));
                    for (const auto& c : comps)
                        if (dominance_greater(a, b) && dominance_greater(b, c))
                            CHECK(dominance_greater(a, c));
                }
            }
        }
    }
}

TEST_CASE("sort_to_partition examples and stability") {
    {
        auto [plus, w] = sort_to_partition({0, 2, 1});
        CHECK(plus == Composition{2, 1, 0});
        CHECK(w == Permutation{2, 0, 1}); // positions (1,2,3) -> (3,1,2)
        CHECK(apply_perm(w, {0, 2, 1}) == plus);
    }
    {
        auto [plus, w] = sort_to_partition({1, 1});
        CHECK(plus == Composition{1, 1});
        CHECK(w == identity_perm(2));
    }
    {
        auto [plus, w] = sort_to_partition({3, 3, 5});
        CHECK(plus == Composition{5, 3, 3});
        CHECK(w[0] < w[1]); // the two 3s keep their order
        CHECK(apply_perm(w, {3, 3, 5}) == plus);
    }
    RatSampler s(5, 6);
    for (int trial = 0; trial < 20; ++trial) {
        Composition g(3);
        for (auto& v : g) v = static_cast<int>(s.draw(0, 4));
        auto [plus, w] = sort_to_partition(g);
        CHECK(is_partition(plus));
        CHECK(apply_perm(w, g) == plus);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g[i] == g[j]) CHECK(w[i] < w[j]);
    }
}

TEST_CASE("parity split groups residues and reconstructs the input") {
    Polynomial p = parse_polynomial("x1 + x1^2", 2, 2);
    auto parts = parity_split(p, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == ParityType{0, 0});
    CHECK(parts[0].second == parse_polynomial("x1^2", 2, 2));
    CHECK(parts[1].first == ParityType{1, 0});
    CHECK(parts[1].second == parse_polynomial("x1", 2, 2));

    auto single = parity_split(parse_polynomial("x1^2 x2", 2, 3), 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == ParityType{2, 1});

    RatSampler s(9, 8);
    Polynomial q = random_poly(s, 2, 3, 6);
    auto split = parity_split(q, 3);
    Polynomial sum(2, 3);
    std::set<Composition> seen;
    for (const auto& [a, part] : split) {
        sum += part;
        for (const auto& [e, c] : part.terms()) {
            CHECK(!seen.count(e));
            seen.insert(e);
            for (int i = 0; i < 2; ++i) CHECK(e[i] % 3 == a[i]);
        }
    }
    CHECK(sum == q);
}

TEST_CASE("y view substitution and its inverse") {
    Polynomial y1 = Polynomial::x_power(2, 3, 1, 1);
    CHECK(y_view(y1, 3) == Polynomial::x_power(2, 3, 1, 3));
    Polynomial g = parse_polynomial("x1 x2^2", 2, 2);
    CHECK(y_view(g, 2) == parse_polynomial("x1^2 x2^4", 2, 2));
    CHECK(x_to_y(y_view(g, 2), 2) == g);
    CHECK_THROWS_AS(x_to_y(parse_polynomial("x1^3", 2, 2), 2), HypothesisViolation);
}

TEST_CASE("text round trip and parse errors") {
    Polynomial p = parse_polynomial("2/3 * x1^2 x2 - x1 + 1", 2, 2);
    CHECK(parse_polynomial(p.to_text(), 2, 2) == p);
    CHECK(p.coefficient({1, 0}) == CycNumber::from_rational(rat(-1), 2));
    CHECK_THROWS_AS(parse_polynomial("x3", 2, 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1 + + x1", 2, 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("q", 2, 2), ParseError);
    CHECK(Polynomial::zero(2, 2).to_text() == "0");
}

TEST_CASE("JSON round trip is sorted by exponent") {
    RatSampler s(13, 9);
    Polynomial p = random_poly(s, 3, 4, 4);
    Polynomial q = Polynomial::from_json(p.to_json());
    CHECK(p == q);
    std::string j = p.to_json();
    CHECK(j.find("\"nvars\":3") != std::string::npos);
    CHECK(j.find("\"m\":4") != std::string::npos);
}
