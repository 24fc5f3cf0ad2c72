#include <doctest.h>

#include "gfc/cartier.hpp"
#include "test_helpers.hpp"

using namespace gfc;

namespace {

Curve f33_curve() {
    auto f4 = make_field(2, 2);
    return make_curve(f4, 3, 3, {parse_element(f4, "0,1")});
}

} // namespace

TEST_CASE("curve validation") {
    auto f2 = make_field(2, 1);
    auto f4 = make_field(2, 2);
    auto f9 = make_field(3, 2);

    CHECK_THROWS_AS(make_curve(f2, 2, 3, {FieldElement::one(f2)}), error); // k not coprime to p
    // over F_2 every lambda candidate is 0 or 1
    CHECK_THROWS_AS(make_curve(f2, 3, 3, {FieldElement::one(f2)}), error);
    CHECK_THROWS_AS(make_curve(f2, 3, 3, {FieldElement::zero(f2)}), error);
    CHECK_NOTHROW(make_curve(f4, 3, 3, {parse_element(f4, "0,1")}));
    // distinctness
    CHECK_THROWS_AS(
        make_curve(f9, 2, 4, {parse_element(f9, "2"), parse_element(f9, "2")}), error);
    auto humbert = make_curve(f9, 2, 4, {parse_element(f9, "2"), parse_element(f9, "0,1")});
    CHECK(humbert->genus == 5);
    CHECK(humbert->deltas.size() == 3);
    CHECK(humbert->deltas[0].is_one());
}

TEST_CASE("genus values") {
    CHECK(curve_genus(3, 3) == 10);
    CHECK(curve_genus(2, 4) == 5);
    CHECK(curve_genus(5, 2) == 6);
    CHECK(curve_genus(2, 3) == 1);
    CHECK(curve_genus(3, 2) == 1);
    CHECK(curve_genus(2, 2) == 0);
    CHECK(curve_genus(7, 5) == 1 + (7LL * 7 * 7 * 7) * (6 * 4 - 2) / 2);
}

TEST_CASE("curve description strings") {
    auto c = f33_curve();
    CHECK(curve_to_string(c) == "2^2:1,1,1;3;3;0,1");
    auto back = parse_curve(curve_to_string(c));
    CHECK(back->same_as(*c));
    auto fermat = parse_curve("2^1:0,1;5;2");
    CHECK(fermat->genus == 6);
    CHECK_THROWS_AS(parse_curve("2^1:0,1;2;3;1"), error);
}

TEST_CASE("multiplication and the defining relations") {
    auto c = f33_curve();
    const auto& f = c->field;
    auto y3 = FunctionFieldElement::generator(c, 3);
    auto y4 = FunctionFieldElement::generator(c, 4);

    // y_j^{k-1} * y_j = -(delta_j + z^k), i.e. 1 + z^k + y_3^k = 0
    CHECK(y3.pow(c->k) == FunctionFieldElement::from_rational(c, c->relation_value(3)));
    CHECK(y3.pow(c->k - 1) * y3 == FunctionFieldElement::from_rational(c, c->relation_value(3)));
    auto one_plus_zk_plus_y3k =
        FunctionFieldElement::from_rational(
            c, RationalFunction(Polynomial::one(f) +
                                Polynomial::monomial(FieldElement::one(f), c->k))) +
        y3.pow(c->k);
    CHECK(one_plus_zk_plus_y3k.is_zero());
    CHECK(y4.pow(c->k) == FunctionFieldElement::from_rational(c, c->relation_value(4)));

    // k=2, n=4: y_4 y_5 is a single term at (0,1,1)
    auto f9 = make_field(3, 2);
    auto humbert = make_curve(f9, 2, 4, {parse_element(f9, "2"), parse_element(f9, "0,1")});
    auto prod = FunctionFieldElement::generator(humbert, 4) *
                FunctionFieldElement::generator(humbert, 5);
    REQUIRE(prod.is_single_term());
    CHECK(prod.terms().begin()->first == FunctionFieldElement::Key{0, 1, 1});
    CHECK(prod.terms().begin()->second == RationalFunction::one(f9));

    // (y_3 y_4)^2 over F_9 with lambda_1 = 2 reduces to (1+z^2)(2+z^2)
    auto sq = (FunctionFieldElement::generator(humbert, 3) *
               FunctionFieldElement::generator(humbert, 4))
                  .pow(2);
    auto expected = RationalFunction(parse_polynomial(f9, "1,0,0,0,1,0") *
                                     parse_polynomial(f9, "2,0,0,0,1,0"));
    CHECK(sq == FunctionFieldElement::from_rational(humbert, expected));
}

TEST_CASE("derivative of the generators") {
    auto c = f33_curve();
    const auto& f = c->field;
    auto y3 = FunctionFieldElement::generator(c, 3);
    // d y_3 / dz = z^{k-1} y_3 / (1 + z^k)
    auto expected = y3 * RationalFunction(Polynomial::monomial(FieldElement::one(f), c->k - 1),
                                          c->branch_polynomial(3));
    CHECK(y3.derivative() == expected);

    // z^r at the trivial key differentiates coefficientwise
    auto zr = FunctionFieldElement::from_rational(
        c, RationalFunction(Polynomial::monomial(FieldElement::one(f), 5)));
    auto dzr = FunctionFieldElement::from_rational(
        c, RationalFunction(Polynomial::monomial(FieldElement::one(f), 4)));
    CHECK(zr.derivative() == dzr);
}

TEST_CASE("derivative matches the quotient-rule expansion") {
    // d/dz ( z / (y_3 y_4) ) = (r - z^k (y_3^{-k} + y_4^{-k})) z^{r-1} / (y_3 y_4), r = 1
    auto c = f33_curve();
    const auto& f = c->field;
    auto y3 = FunctionFieldElement::generator(c, 3);
    auto y4 = FunctionFieldElement::generator(c, 4);
    auto x = FunctionFieldElement::z_map(c) * (y3 * y4).inverse_single_term();

    auto r_term = RationalFunction::one(f);
    auto zk = RationalFunction(Polynomial::monomial(FieldElement::one(f), c->k));
    auto y3_minus_k = c->relation_value(3).inverse();
    auto y4_minus_k = c->relation_value(4).inverse();
    auto factor = r_term - zk * (y3_minus_k + y4_minus_k);
    CHECK(x.derivative() == (y3 * y4).inverse_single_term() * factor);
}

TEST_CASE("derivation is a derivation") {
    std::mt19937 rng(41);
    auto c33 = f33_curve();
    auto f9 = make_field(3, 2);
    auto humbert = make_curve(f9, 2, 4, {parse_element(f9, "2"), parse_element(f9, "0,1")});
    for (const auto& c : {c33, humbert}) {
        for (int i = 0; i < 30; ++i) {
            auto a = testing::random_ffe(c, rng, 2);
            auto b = testing::random_ffe(c, rng, 2);
            CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
            CHECK((a + b).derivative() == a.derivative() + b.derivative());
        }
    }
}

TEST_CASE("p-th power round trips") {
    std::mt19937 rng(43);
    auto c33 = f33_curve();
    auto f9 = make_field(3, 2);
    auto humbert = make_curve(f9, 2, 4, {parse_element(f9, "2"), parse_element(f9, "0,1")});
    auto f25 = make_field(5, 2);
    auto c35 = make_curve(f25, 3, 3, {parse_element(f25, "0,1")});

    for (const auto& c : {c33, humbert, c35}) {
        auto y3 = FunctionFieldElement::generator(c, 3);
        CHECK(y3.pow(c->field->p).pth_root() == y3);
        for (int i = 0; i < 25; ++i) {
            auto x = testing::random_ffe(c, rng, 2);
            CHECK(x.pow(c->field->p).pth_root() == x);
        }
    }

    // square then root of the positively-rewritten z/(y_3 y_4)
    auto x = FunctionFieldElement::z_map(c33) *
             (FunctionFieldElement::generator(c33, 3) * FunctionFieldElement::generator(c33, 4))
                 .inverse_single_term();
    CHECK(x.pow(2).pth_root() == x);

    // constants root through the field
    auto f4 = c33->field;
    auto t = parse_element(f4, "0,1");
    auto const_term = FunctionFieldElement::from_rational(c33, RationalFunction::constant(t));
    CHECK(const_term.pth_root() ==
          FunctionFieldElement::from_rational(c33, RationalFunction::constant(t.pth_root())));

    CHECK_THROWS_AS(FunctionFieldElement::z_map(c33).pth_root(), error);
}

TEST_CASE("single-term inverses") {
    auto c = f33_curve();
    std::mt19937 rng(47);
    for (int i = 0; i < 30; ++i) {
        FunctionFieldElement::Key key(c->n - 1);
        for (auto& b : key) b = rng() % c->k;
        auto x = FunctionFieldElement::term(c, key,
                                            testing::random_rational(c->field, rng, 3, true));
        CHECK(x * x.inverse_single_term() == FunctionFieldElement::one(c));
    }
}

TEST_CASE("moduli transforms") {
    auto f9 = make_field(3, 2);
    auto t = parse_element(f9, "0,1");
    auto two = parse_element(f9, "2");

    SUBCASE("componentwise inversion") {
        auto v = moduli_transform({two, t}, LambdaMove::invert);
        CHECK(v[0] == two); // 1/2 = 2 in characteristic 3
        CHECK(v[1] == t.inverse());
        auto vv = moduli_transform(v, LambdaMove::invert);
        CHECK(vv[0] == two);
        CHECK(vv[1] == t);
    }

    SUBCASE("pivot transform puts the last lambda at infinity") {
        auto u = moduli_transform({two, t}, LambdaMove::pivot_last);
        REQUIRE(u.size() == 2);
        CHECK(u[0] == t / (t - FieldElement::one(f9)));
        CHECK(u[1] == t / (t - two));

        auto u3 = moduli_transform({t}, LambdaMove::pivot_last);
        REQUIRE(u3.size() == 1);
        CHECK(u3[0] == t / (t - FieldElement::one(f9)));
    }

    SUBCASE("degenerate input") {
        CHECK_THROWS_AS(moduli_transform({FieldElement::one(f9)}, LambdaMove::pivot_last),
                        error);
        CHECK_THROWS_AS(moduli_transform({FieldElement::zero(f9)}, LambdaMove::invert), error);
    }
}
