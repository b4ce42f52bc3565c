#include <doctest.h>

#include "dunkl/singular.hpp"
#include "dunkl/sampling.hpp"

using namespace dunkl;

TEST_CASE("K_1 membership") {
    // m=2, kappa_1 = -1/2: witness n=0, i=1, value 0
    ParamTuple k = make_params(2, 1, {rat(2, 7), rat(-1, 2)});
    auto w = in_K1(k, 3);
    REQUIRE(w.has_value());
    CHECK(w->n == 0);
    CHECK(w->i == 1);
    CHECK(w->value == Rational(0));

    CHECK(!in_K1(make_params(2, 1, {rat(0), rat(0)}), 2).has_value());
    CHECK(!in_K1(make_params(4, 1, {rat(0), rat(0), rat(0), rat(0)}), 3).has_value());

    // m=3, N=2, kappa_0=-1/3, kappa_1=-2/3: the two candidate (n,1) values are
    // -1/3 and -2/3, neither a nonpositive integer; kappa_2 chosen inert
    ParamTuple k2 = make_params(3, 1, {rat(-1, 3), rat(-2, 3), rat(1, 5)});
    CHECK(!in_K1(k2, 2).has_value());
    // flipping kappa_2 to -2/3 triggers i=2, n=0
    ParamTuple k3 = make_params(3, 1, {rat(-1, 3), rat(-2, 3), rat(-2, 3)});
    auto w3 = in_K1(k3, 2);
    REQUIRE(w3.has_value());
    CHECK(w3->i == 2);
}

TEST_CASE("K_0 membership: literal and corrected ranges") {
    auto mk = [](const Rational& k0) { return make_params(2, 1, {k0, rat(1, 9)}); };
    CHECK(!in_K0(mk(rat(0)), 3).has_value());
    CHECK(!in_K0(mk(rat(1)), 3).has_value());

    // literal printed ranges: 2 <= j-1 <= n <= N, so j >= 3
    auto lit = in_K0(mk(rat(-3, 2)), 2, K0Config::literal());
    REQUIRE(lit.has_value());
    CHECK(lit->j == 3);
    CHECK(lit->n == 2);
    CHECK(lit->l == 0);
    CHECK(!in_K0(mk(rat(-1, 2)), 2, K0Config::literal()).has_value());
    // N=3, kappa_0 = -4/3: literal witness j=4, n=3
    auto lit43 = in_K0(mk(rat(-4, 3)), 3, K0Config::literal());
    REQUIRE(lit43.has_value());
    CHECK(lit43->j == 4);
    CHECK(lit43->n == 3);

    // corrected ranges 1 <= j <= n-1 recover the type-A set
    auto cor = in_K0(mk(rat(-1, 2)), 2, K0Config::corrected());
    REQUIRE(cor.has_value());
    CHECK(cor->j == 1);
    CHECK(cor->n == 2);
    CHECK(in_K0(mk(rat(-7, 2)), 2, K0Config::corrected()).has_value());
    CHECK(in_K0(mk(rat(-4, 3)), 3, K0Config::corrected()).has_value());
    CHECK(!in_K0(mk(rat(-4, 3)), 2, K0Config::corrected()).has_value());
    // integers are not in the corrected type-A set
    CHECK(!in_K0(mk(rat(-2)), 3, K0Config::corrected()).has_value());
}

TEST_CASE("Gram corank oracle") {
    // kappa = 0 is regular
    OperatorContext c0(2, 1, 2, make_params(2, 1, {rat(0), rat(0)}));
    CHECK(gram_corank_oracle(c0, 4) == std::vector<int>{0, 0, 0, 0});

    // m=2, N=1, kappa_1 = -1/2: T x = (1+2 kappa_1) = 0
    OperatorContext c1(2, 1, 1, make_params(2, 1, {rat(0), rat(-1, 2)}));
    auto coranks = gram_corank_oracle(c1, 3);
    CHECK(coranks[0] >= 1);

    // generic random kappa: all coranks zero
    RatSampler s(7, 20);
    OperatorContext cg(2, 1, 2, sample_params(2, 1, 2, s));
    CHECK(gram_corank_oracle(cg, 4) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("radical bases") {
    OperatorContext c1(2, 1, 1, make_params(2, 1, {rat(0), rat(-1, 2)}));
    auto rad = radical_basis(c1, 1);
    REQUIRE(rad.size() == 1);
    CHECK(rad[0] == Polynomial::x_power(1, 2, 1, 1));
    CHECK(radical_basis(c1, 0).empty());

    RatSampler s(11, 20);
    OperatorContext cg(3, 1, 2, sample_params(3, 1, 2, s));
    for (int d = 1; d <= 3; ++d) CHECK(radical_basis(cg, d).empty());

    // the radical element generates an ideal that pairs to zero
    OperatorContext cw(2, 1, 2, make_params(2, 1, {rat(1, 3), rat(-5, 6)}));
    auto rw = radical_basis(cw, 1);
    REQUIRE(!rw.empty());
    for (const auto& q : rw) {
        for (int i = 1; i <= 2; ++i) CHECK(apply_T(cw, i, q).is_zero());
        for (int j = 1; j <= 2; ++j) {
            Polynomial xq = Polynomial::x_power(2, 2, j, 1) * q;
            for (const auto& e : compositions_of(2, 2))
                CHECK(pairing(cw, Polynomial::monomial(2, 2, e, Rational(1)), xq).is_zero());
        }
    }
}

TEST_CASE("predicted radical degree from the norm formula") {
    // kappa_1 = -1/2 - kappa_0: witness at degree 1
    OperatorContext c1(2, 1, 2, make_params(2, 1, {rat(1, 3), rat(-5, 6)}));
    CHECK(min_radical_degree(c1, 4) == 1);
    // kappa_1 = -1/2, generic kappa_0: witness x_1 x_2 at degree 2
    OperatorContext c2(2, 1, 2, make_params(2, 1, {rat(1, 3), rat(-1, 2)}));
    CHECK(min_radical_degree(c2, 4) == 2);
    // generic parameters: nothing up to the bound
    RatSampler s(13, 20);
    OperatorContext cg(2, 1, 2, sample_params(2, 1, 2, s));
    CHECK(!min_radical_degree(cg, 4).has_value());
}

TEST_CASE("K_1 soundness: witness implies oracle corank at the predicted degree") {
    for (auto [k0, k1] :
         {std::pair{rat(1, 3), rat(-5, 6)}, {rat(1, 5), rat(-1, 2)},
          {rat(2, 5), rat(-1, 2) - rat(2, 5) - 1}}) {
        OperatorContext ctx(2, 1, 2, make_params(2, 1, {k0, k1}));
        REQUIRE(in_K1(ctx.kappa, 2).has_value());
        auto d = min_radical_degree(ctx, 4);
        REQUIRE(d.has_value());
        auto coranks = gram_corank_oracle(ctx, *d);
        CHECK(coranks[*d - 1] >= 1);
        CHECK(!radical_basis(ctx, *d).empty());
    }
    // m = 3: witnesses through either diagonal parameter
    {
        // i = 1 family: kappa_0 + 1/3 + kappa_1 = 0
        OperatorContext c1(3, 1, 2,
                           make_params(3, 1, {rat(1, 5), -rat(1, 3) - rat(1, 5), rat(2, 7)}));
        auto w1 = in_K1(c1.kappa, 2);
        REQUIRE(w1.has_value());
        CHECK(w1->i == 1);
        auto d1 = min_radical_degree(c1, 4);
        REQUIRE(d1.has_value());
        CHECK(gram_corank_oracle(c1, *d1)[*d1 - 1] >= 1);
    }
    {
        // i = 2 family: 2/3 + kappa_2 = 0 (n = 0); the norm of x^{(2,2)} first
        // picks up the vanishing factor, so the radical appears at degree 4
        OperatorContext c2(3, 1, 2, make_params(3, 1, {rat(1, 5), rat(2, 7), rat(-2, 3)}));
        auto w2 = in_K1(c2.kappa, 2);
        REQUIRE(w2.has_value());
        CHECK(w2->i == 2);
        auto d2 = min_radical_degree(c2, 4);
        REQUIRE(d2.has_value());
        CHECK(gram_corank_oracle(c2, *d2)[*d2 - 1] >= 1);
    }
}

TEST_CASE("singular report JSON") {
    OperatorContext ctx(2, 1, 2, make_params(2, 1, {rat(1, 3), rat(-1, 2)}));
    SingularReport r = singular_report(ctx, 2);
    CHECK(r.k1_member);
    CHECK(!r.k0_member);
    CHECK(r.oracle_corank_by_degree == std::vector<int>{0, 1});
    std::string j = singular_report_json(r);
    CHECK(j.find("\"K0\"") != std::string::npos);
    CHECK(j.find("\"K1\"") != std::string::npos);
    CHECK(j.find("\"corank\":1") != std::string::npos);

    // K0-confirmed only when the oracle agrees: corrected-mode member at -1/2
    OperatorContext c0(2, 1, 2, make_params(2, 1, {rat(-1, 2), rat(1, 9)}));
    SingularReport r0 = singular_report(c0, 2, K0Config::corrected());
    CHECK(r0.k0_member);
    CHECK(r0.k0_confirmed); // y_1 - y_2 is in the type-A radical, degree m = 2
    // literal mode does not even claim membership
    SingularReport r0lit = singular_report(c0, 2, K0Config::literal());
    CHECK(!r0lit.k0_member);
}

TEST_CASE("shift verifiers on explicit inputs") {
    OperatorContext ctx(3, 1, 2, make_params(3, 1, {rat(2, 5), rat(-1, 3), rat(4, 7)}));
    Polynomial one_y = Polynomial::constant(2, 3, Rational(1));
    Polynomial e1_y = parse_polynomial("x1 + x2", 2, 3);

    SUBCASE("cyclic, full family") {
        CHECK(verify_shift_cyclic_full(ctx, 1, one_y));
        CHECK(verify_shift_cyclic_full(ctx, 2, e1_y));
        CHECK_THROWS_AS(verify_shift_cyclic_full(ctx, 0, one_y), HypothesisViolation);
        CHECK_THROWS_AS(verify_shift_cyclic_full(ctx, 3, one_y), HypothesisViolation);
        OperatorContext c42(4, 2, 2, make_params(4, 2, {rat(1, 5), rat(1, 7)}));
        CHECK_THROWS_AS(verify_shift_cyclic_full(c42, 1, Polynomial::constant(2, 4, rat(1))),
                        HypothesisViolation);
    }

    SUBCASE("cyclic, constrained family") {
        OperatorContext c42(4, 2, 2, make_params(4, 2, {rat(1, 5), rat(1, 7)}));
        Polynomial g = parse_polynomial("x1 + 2 x2", 2, 4);
        for (int t = 1; t <= 1; ++t)
            for (int s = 0; s <= 1; ++s) CHECK(verify_shift_cyclic_p(c42, t, s, g));
        CHECK_THROWS_AS(verify_shift_cyclic_p(c42, 2, 0, g), HypothesisViolation);
        CHECK_THROWS_AS(verify_shift_cyclic_p(c42, 1, 2, g), HypothesisViolation);
        // p = 1 reduces to the full shift
        CHECK(verify_shift_cyclic_p(ctx, 2, 0, e1_y));
    }

    SUBCASE("symmetric") {
        CHECK(verify_shift_symmetric(ctx, e1_y, one_y));
        CHECK(verify_shift_symmetric(ctx, e1_y, e1_y));
        Polynomial asym = parse_polynomial("x1", 2, 3);
        CHECK_THROWS_AS(verify_shift_symmetric(ctx, asym, one_y), HypothesisViolation);
        Polynomial etacoeff =
            e1_y.scale(CycNumber::root_of_unity_power(3, 1));
        CHECK_THROWS_AS(verify_shift_symmetric(ctx, etacoeff, one_y), HypothesisViolation);
    }

    SUBCASE("corollary") {
        Polynomial one_x = Polynomial::constant(2, 3, Rational(1));
        // (pi, pi)_k = (pi, pi)_k (1,1)_{k+1} is the consistency tautology
        CHECK(verify_shift_corollary(ctx, one_x, one_x));
        CHECK(verify_shift_corollary(ctx, y_view(e1_y, 3), y_view(e1_y, 3)));
        CHECK_THROWS_AS(verify_shift_corollary(ctx, Polynomial::x_power(2, 3, 1, 1), one_x),
                        HypothesisViolation);
    }
}

TEST_CASE("shift parameter conventions") {
    // G(m,1,N): every orbit parameter increments by 1
    OperatorContext c1(3, 1, 2, make_params(3, 1, {rat(1, 5), rat(1, 7), rat(2, 7)}));
    ParamTuple s1 = shift_params_plus_one(c1);
    CHECK(s1.kappa ==
          std::vector<Rational>{rat(6, 5), rat(8, 7), rat(9, 7)});
    // G(4,2,2): cyclic free parameter shifts by 1/p
    OperatorContext c2(4, 2, 2, make_params(4, 2, {rat(1, 5), rat(1, 7)}));
    ParamTuple s2 = shift_params_plus_one(c2);
    CHECK(s2.free_values() == std::vector<Rational>{rat(6, 5), rat(1, 7) + rat(1, 2)});
    // N = 1: no period-2 orbit, kappa_0 untouched
    OperatorContext c3(3, 1, 1, make_params(3, 1, {rat(1, 5), rat(1, 7), rat(2, 7)}));
    ParamTuple s3 = shift_params_plus_one(c3);
    CHECK(s3.kappa == std::vector<Rational>{rat(1, 5), rat(8, 7), rat(9, 7)});
    // p = m: only the period-2 orbit
    OperatorContext c4(2, 2, 2, make_params(2, 2, {rat(1, 5)}));
    ParamTuple s4 = shift_params_plus_one(c4);
    CHECK(s4.kappa == std::vector<Rational>{rat(6, 5), rat(0)});
}

TEST_CASE("constrained G(m,p,N) parameters run consistently") {
    // norm formula with the periodic tuple of G(4,2,2)
    OperatorContext ctx(4, 2, 2, make_params(4, 2, {rat(1, 5), rat(2, 7)}));
    JackContext jc(2, ctx.kappa0(), 4);
    for (const auto& alpha : {ParityType{0, 0}, {1, 0}, {2, 1}, {3, 3}}) {
        Polynomial f = Polynomial::monomial(2, 4, alpha, Rational(1)) *
                       y_view(zeta(jc, {0, 0}), 4);
        CHECK(pairing(ctx, f, f) ==
              CycNumber::from_rational(norm_closed_form(ctx, alpha, {0, 0}), 4));
    }
    // oracle and witness machinery under the constraint
    CHECK(gram_corank_oracle(ctx, 3) == std::vector<int>{0, 0, 0});
    OperatorContext cw(4, 2, 2,
                       make_params(4, 2, {rat(1, 5), rat(-1, 4) - rat(1, 5)}));
    REQUIRE(in_K1(cw.kappa, 2).has_value());
    auto d = min_radical_degree(cw, 4);
    REQUIRE(d.has_value());
    CHECK(gram_corank_oracle(cw, *d)[*d - 1] >= 1);
}

TEST_CASE("invariance predicates") {
    OperatorContext ctx(4, 2, 2, make_params(4, 2, {rat(1, 5), rat(1, 7)}));
    Polynomial full = Polynomial::monomial(2, 4, Composition(2, 2), Rational(1)); // x^{(m/p)1}
    CHECK(is_invariant(ctx, full));
    CHECK(!is_invariant(ctx, Polynomial::x_power(2, 4, 1, 2)));
    Polynomial e1y = y_view(parse_polynomial("x1 + x2", 2, 4), 4);
    CHECK(is_invariant(ctx, e1y));
    CHECK(is_symmetric_in_y(parse_polynomial("x1 x2 + x1 + x2", 2, 4)));
    CHECK(!is_symmetric_in_y(parse_polynomial("x1 x2^2", 2, 4)));
}
