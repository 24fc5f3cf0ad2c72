#include <doctest.h>

#include <set>

#include "gfc/basis.hpp"
#include "test_helpers.hpp"

using namespace gfc;

namespace {

Curve f33_curve() {
    auto f4 = make_field(2, 2);
    return make_curve(f4, 3, 3, {parse_element(f4, "0,1")});
}

Curve humbert_curve() {
    auto f9 = make_field(3, 2);
    return make_curve(f9, 2, 4, {parse_element(f9, "2"), parse_element(f9, "0,1")});
}

std::set<std::string> index_set(const std::vector<BasisIndex>& v) {
    std::set<std::string> s;
    for (const auto& idx : v) s.insert(idx.to_string());
    return s;
}

} // namespace

TEST_CASE("basis enumeration") {
    auto basis33 = enumerate_basis(f33_curve());
    CHECK(basis33.size() == 10);
    CHECK(index_set(basis33) ==
          std::set<std::string>{"0;1,1", "0;0,2", "0;2,0", "0;2,1", "0;1,2", "1;2,1", "1;1,2",
                                "0;2,2", "1;2,2", "2;2,2"});

    auto basis24 = enumerate_basis(humbert_curve());
    CHECK(basis24.size() == 5);
    CHECK(index_set(basis24) ==
          std::set<std::string>{"0;1,1,1", "1;1,1,1", "0;0,1,1", "0;1,0,1", "0;1,1,0"});

    auto f3 = make_field(3, 1);
    auto c23 = make_curve(f3, 2, 3, {parse_element(f3, "2")});
    auto basis23 = enumerate_basis(c23);
    REQUIRE(basis23.size() == 1);
    CHECK(basis23[0].to_string() == "0;1,1");

    CHECK(std::is_sorted(basis33.begin(), basis33.end()));

    auto f5 = make_field(5, 1);
    CHECK_THROWS_AS(enumerate_basis(make_curve(f5, 2, 2, {})), error);
}

TEST_CASE("tuple counting") {
    CHECK(tuple_sum_count(3, 3, 2) == 3); // (0,2), (1,1), (2,0)
    long long total = 0;
    for (std::uint32_t l = 0; l <= 2 * 3; ++l) total += tuple_sum_count(3, 4, l);
    CHECK(total == 27);
    for (std::uint32_t l = 0; l <= 4; ++l)
        CHECK(tuple_sum_count(3, 3, l) == tuple_sum_count(3, 3, 4 - l));
    CHECK_THROWS_AS(tuple_sum_count(3, 3, 5), error);
}

TEST_CASE("counting reproduces the genus") {
    CHECK(genus_from_counting(3, 3) == 10);
    CHECK(genus_from_counting(2, 4) == 5);
    CHECK(genus_from_counting(5, 2) == 6);
    for (std::uint32_t k = 2; k <= 7; ++k)
        for (std::uint32_t n = 2; n <= 5; ++n)
            CHECK(genus_from_counting(k, n) == curve_genus(k, n));
}

TEST_CASE("divisors") {
    auto c = f33_curve();
    CHECK(theta_divisor(parse_basis_index("0;2,2"), c) ==
          std::vector<long long>{2, 0, 0, 0});

    // canonical degree: sum of coefficients times k^{n-1} equals 2g-2
    long long knm1 = 9;
    for (const auto& idx : enumerate_basis(c)) {
        auto d = theta_divisor(idx, c);
        long long degree = 0;
        for (auto coeff : d) {
            CHECK(coeff >= 0);
            degree += coeff * knm1;
        }
        CHECK(degree == 2 * c->genus - 2);
    }

    // a non-holomorphic index is flagged by a negative first coefficient
    auto bad = theta_divisor(BasisIndex{0, {0, 0}}, c);
    CHECK(bad[0] == -2);
}

TEST_CASE("characters") {
    auto c = f33_curve();
    CHECK(theta_character(parse_basis_index("0;1,1"), c) ==
          std::vector<std::uint32_t>{2, 2, 1, 1});
    CHECK(theta_character(parse_basis_index("1;2,2"), c) ==
          std::vector<std::uint32_t>{1, 1, 2, 2});
    for (const auto& idx : enumerate_basis(c)) {
        auto e = theta_character(idx, c);
        std::uint32_t sum = 0;
        for (auto x : e) sum += x;
        CHECK(sum % c->k == 0);
    }
}

TEST_CASE("theta to function field") {
    auto f9 = make_field(3, 2);
    auto c23 = make_curve(f9, 2, 3, {parse_element(f9, "2")});
    auto form = theta_form(parse_basis_index("0;1,1"), c23);
    REQUIRE(form.is_single_term());
    CHECK(form.terms().begin()->first == FunctionFieldElement::Key{1, 1});
    // 1/((1+z^2)(2+z^2)): the two relation signs cancel
    auto expected = RationalFunction(Polynomial::one(f9),
                                     parse_polynomial(f9, "1,0,0,0,1,0") *
                                         parse_polynomial(f9, "2,0,0,0,1,0"));
    CHECK(form.terms().begin()->second == expected);

    auto c33 = f33_curve();
    auto form2 = theta_form(parse_basis_index("2;2,2"), c33);
    REQUIRE(form2.is_single_term());
    CHECK(form2.terms().begin()->first == FunctionFieldElement::Key{1, 1});
    auto z2 = Polynomial::monomial(FieldElement::one(c33->field), 2);
    auto denom = c33->branch_polynomial(3) * c33->branch_polynomial(4);
    CHECK(form2.terms().begin()->second == RationalFunction(z2, denom));

    // an index with r too large is still representable as a form
    auto merom = theta_form(BasisIndex{5, {0, 0}}, c33);
    REQUIRE(merom.is_single_term());
    CHECK(merom.terms().begin()->second ==
          RationalFunction(Polynomial::monomial(FieldElement::one(c33->field), 5)));
}

TEST_CASE("coordinates round trip") {
    for (const auto& c : {f33_curve(), humbert_curve()}) {
        auto basis = enumerate_basis(c);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto coords = basis_coordinates(theta_form(basis[i], c), c);
            for (std::size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j].is_zero() == (i != j));
            CHECK(coords[i].is_one());
        }

        // linearity: the sum of two basis images has exactly two unit coordinates
        auto sum = theta_form(basis[0], c) + theta_form(basis[2], c);
        auto coords = basis_coordinates(sum, c);
        CHECK(coords[0].is_one());
        CHECK(coords[2].is_one());
        int nonzero = 0;
        for (const auto& x : coords)
            if (!x.is_zero()) ++nonzero;
        CHECK(nonzero == 2);
    }
}

TEST_CASE("forms outside the holomorphic span are rejected") {
    auto c = f33_curve();
    const auto& f = c->field;

    // z^{sum(alpha)-1} on the (2,2) denominator pattern: degree bound violated
    auto bad = FunctionFieldElement::term(
        c, {1, 1},
        RationalFunction(Polynomial::monomial(FieldElement::one(f), 3),
                         c->branch_polynomial(3) * c->branch_polynomial(4)));
    CHECK_THROWS_AS(basis_coordinates(bad, c), error);

    // a bare rational part (key zero) can never be holomorphic
    CHECK_THROWS_AS(basis_coordinates(FunctionFieldElement::one(c), c), error);

    // a coefficient with a denominator not matching the branch pattern
    auto wrong_denom = FunctionFieldElement::term(
        c, {1, 1},
        RationalFunction(Polynomial::one(f),
                         Polynomial::variable(f) * c->branch_polynomial(3) *
                             c->branch_polynomial(4)));
    CHECK_THROWS_AS(basis_coordinates(wrong_denom, c), error);
}

TEST_CASE("canonical subset") {
    auto c33 = f33_curve();
    auto sub33 = canonical_subset(c33);
    REQUIRE(sub33.size() == 4);
    CHECK(sub33[0].to_string() == "0;2,2");
    CHECK(sub33[1].to_string() == "1;2,2");
    CHECK(sub33[2].to_string() == "0;1,2");
    CHECK(sub33[3].to_string() == "0;2,1");

    auto hum = humbert_curve();
    auto sub24 = canonical_subset(hum);
    REQUIRE(sub24.size() == 5);
    CHECK(sub24[0].to_string() == "0;1,1,1");
    CHECK(sub24[1].to_string() == "1;1,1,1");
    CHECK(sub24[2].to_string() == "0;0,1,1");
    CHECK(sub24[3].to_string() == "0;1,0,1");
    CHECK(sub24[4].to_string() == "0;1,1,0");

    auto f2 = make_field(2, 1);
    auto fermat5 = make_curve(f2, 5, 2, {});
    auto sub52 = canonical_subset(fermat5);
    REQUIRE(sub52.size() == 3);
    CHECK(sub52[0].to_string() == "0;3");
    CHECK(sub52[1].to_string() == "1;3");
    CHECK(sub52[2].to_string() == "0;2");

    auto f3 = make_field(3, 1);
    CHECK_THROWS_AS(canonical_subset(make_curve(f3, 2, 3, {parse_element(f3, "2")})), error);
}

TEST_CASE("canonical subset reproduces the ambient coordinates") {
    // theta_2/theta_1 = z and theta_j/theta_1 = y_j, as exact function field identities
    auto f2 = make_field(2, 1);
    auto f4 = make_field(2, 2);
    std::vector<Curve> curves = {
        make_curve(f2, 5, 2, {}),
        f33_curve(),
        make_curve(f4, 3, 4, {parse_element(f4, "0,1"), parse_element(f4, "1,1")}),
        humbert_curve(),
    };
    for (const auto& c : curves) {
        auto sub = canonical_subset(c);
        auto inv_theta1 = theta_form(sub[0], c).inverse_single_term();
        CHECK(theta_form(sub[1], c) * inv_theta1 == FunctionFieldElement::z_map(c));
        for (std::size_t j = 2; j < sub.size(); ++j)
            CHECK(theta_form(sub[j], c) * inv_theta1 ==
                  FunctionFieldElement::generator(c, static_cast<std::uint32_t>(j + 1)));
    }
}
