#include <doctest.h>

#include "test_helpers.hpp"

using namespace gfc;

TEST_CASE("rational arithmetic examples") {
    auto f2 = make_field(2, 1);
    auto z = RationalFunction::variable(f2);
    auto one = RationalFunction::one(f2);

    // 1/(z+1) + z/(z+1) = 1
    auto zp1 = z + one;
    CHECK(one / zp1 + z / zp1 == one);
    CHECK(z * z == RationalFunction(parse_polynomial(f2, "0,0,1")));

    // (z^2+1)/z / (z+1) = (z+1)/z since z^2+1 = (z+1)^2 in char 2
    auto lhs = RationalFunction(parse_polynomial(f2, "1,0,1"), parse_polynomial(f2, "0,1"));
    CHECK(lhs / zp1 == zp1 / z);
    CHECK_THROWS_AS(one / RationalFunction::zero(f2), error);
}

TEST_CASE("canonical form") {
    auto f3 = make_field(3, 1);
    // 2z/2 normalizes to z over a monic denominator
    auto r = RationalFunction(parse_polynomial(f3, "0,2"), parse_polynomial(f3, "2"));
    CHECK(r.den() == Polynomial::one(f3));
    CHECK(r.num() == Polynomial::variable(f3));

    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto a = testing::random_rational(f3, rng, 4);
        // normalizing twice changes nothing
        auto again = RationalFunction(a.num(), a.den());
        CHECK(a == again);
        CHECK(a.den().leading().is_one());
        CHECK(poly_gcd(a.num(), a.den()).degree() <= 0);
    }
}

TEST_CASE("derivative examples") {
    auto f3 = make_field(3, 1);
    auto z3 = RationalFunction(parse_polynomial(f3, "0,0,0,1"));
    CHECK(z3.derivative().is_zero());

    auto f2 = make_field(2, 1);
    auto zp1 = RationalFunction(parse_polynomial(f2, "1,1"));
    CHECK((RationalFunction::one(f2) / zp1).derivative() ==
          RationalFunction::one(f2) / (zp1 * zp1));

    auto f5 = make_field(5, 1);
    auto z2 = RationalFunction(parse_polynomial(f5, "0,0,1"));
    CHECK(z2.derivative(2) == RationalFunction(parse_polynomial(f5, "2")));
}

TEST_CASE("p-th root examples") {
    auto f2 = make_field(2, 1);
    CHECK(parse_rational(f2, "1,0,1").pth_root() == parse_rational(f2, "1,1"));
    CHECK_THROWS_AS(RationalFunction::variable(f2).pth_root(), error);

    auto f3 = make_field(3, 1);
    auto r = parse_rational(f3, "0,0,0,1|2,0,0,1"); // z^3 / (z^3+2)
    CHECK(r.pth_root() == parse_rational(f3, "0,1|2,1"));
}

TEST_CASE("p-th root round trips") {
    std::mt19937 rng(23);
    for (auto f : {make_field(2, 2), make_field(3, 2), make_field(5, 1)}) {
        for (int i = 0; i < 60; ++i) {
            auto a = testing::random_rational(f, rng, 4);
            auto power = a.pow(f->p);
            CHECK(power.pth_root() == a);
            if (!a.is_zero()) CHECK(power.derivative().is_zero());
        }
    }
}

TEST_CASE("derivative annihilates low-degree polynomials p times") {
    std::mt19937 rng(29);
    for (auto f : {make_field(2, 1), make_field(3, 1), make_field(5, 1)}) {
        for (int i = 0; i < 40; ++i) {
            auto a = RationalFunction(
                testing::random_polynomial(f, rng, static_cast<int>(f->p) - 1));
            CHECK(a.derivative(f->p).is_zero());
        }
    }
}

TEST_CASE("the Cartier building block: (u^p z^{p-1})^{(p-1)} = -u^p") {
    std::mt19937 rng(31);
    for (auto f : {make_field(2, 2), make_field(3, 1), make_field(5, 1)}) {
        const auto p = f->p;
        auto zp1 = RationalFunction(Polynomial::monomial(FieldElement::one(f), p - 1));
        for (int i = 0; i < 40; ++i) {
            auto u = testing::random_rational(f, rng, 3);
            auto up = u.pow(p);
            CHECK((up * zp1).derivative(p - 1) == -up);
        }
    }
}

TEST_CASE("polynomial division and gcd") {
    auto f5 = make_field(5, 1);
    std::mt19937 rng(37);
    for (int i = 0; i < 60; ++i) {
        auto a = testing::random_polynomial(f5, rng, 6);
        auto b = testing::random_polynomial(f5, rng, 3, true);
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        auto g = poly_gcd(a, b);
        if (!a.is_zero()) CHECK(a.divmod(g).second.is_zero());
        CHECK(b.divmod(g).second.is_zero());
    }
}

TEST_CASE("string round trips") {
    auto f4 = make_field(2, 2);
    auto r = parse_rational(f4, "1,1,0,1|1,0,0,1"); // (1+t) + t z over 1 + t z
    CHECK(parse_rational(f4, r.to_string()) == r);
    CHECK_THROWS_AS(parse_polynomial(f4, "1,0,1"), error); // not a multiple of m residues
}
