#include "gfc/closedform.hpp"

namespace gfc {

namespace {

// e_0 .. e_t of the given values, by the usual one-pass expansion
std::vector<FieldElement> elementary_symmetric(const Field& f,
                                               const std::vector<FieldElement>& values) {
    std::vector<FieldElement> e(values.size() + 1, FieldElement::zero(f));
    e[0] = FieldElement::one(f);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t d = i + 1; d-- > 0;) e[d + 1] = e[d + 1] + e[d] * values[i];
    return e;
}

} // namespace

std::vector<WeightedBasisTerm> char2_image(const BasisIndex& idx, const Curve& curve) {
    if (curve->field->p != 2 || curve->k % 2 == 0 || curve->k < 3)
        fail(errc::wrong_characteristic, "closed form needs p = 2 and odd k >= 3");
    if (idx.alphas.size() != curve->n - 1)
        fail(errc::out_of_range, "basis index arity does not match the curve");

    const std::uint32_t k = curve->k;
    std::vector<FieldElement> odd_deltas;
    std::vector<std::uint32_t> halved(idx.alphas.size());
    for (std::size_t i = 0; i < idx.alphas.size(); ++i) {
        std::uint32_t hat = idx.alphas[i];
        if (hat % 2 == 1) {
            odd_deltas.push_back(curve->deltas[i]);
            hat += k;
        }
        halved[i] = hat / 2;
    }
    const std::size_t a_card = odd_deltas.size();
    auto sym = elementary_symmetric(curve->field, odd_deltas);

    std::vector<WeightedBasisTerm> out;
    const bool r_even = idx.r % 2 == 0;
    if (r_even && a_card == 0) return out; // exact form, image zero

    // r even: coefficients e_{#A-2s-1}, base exponent (r+k-1)/2;
    // r odd:  coefficients e_{#A-2s},   base exponent (r-1)/2.
    const std::uint32_t base = r_even ? (idx.r + k - 1) / 2 : (idx.r - 1) / 2;
    const std::size_t top = r_even ? a_card - 1 : a_card;
    for (std::size_t s = 0; 2 * s <= top; ++s) {
        FieldElement c = sym[top - 2 * s];
        if (c.is_zero()) continue;
        BasisIndex image_idx{base + static_cast<std::uint32_t>(s) * k, halved};
        if (!index_is_holomorphic(image_idx, k))
            fail(errc::not_in_span, "closed-form term " + image_idx.to_string() +
                                        " is not holomorphic");
        out.push_back({c.pth_root(), std::move(image_idx)});
    }
    return out;
}

long long char2_lower_bound(std::uint32_t k, std::uint32_t n) {
    if (k % 2 == 0 || k < 3 || n < 2)
        fail(errc::wrong_characteristic, "bound defined for odd k >= 3, n >= 2");
    long long numerator = static_cast<long long>(n - 1) * (k - 1);
    for (std::uint32_t i = 0; i + 1 < n; ++i) numerator *= (k + 1);
    long long denom = 1LL << (n + 1);
    if (numerator % denom != 0) fail(errc::non_integer, "bound is not an integer");
    return numerator / denom;
}

std::optional<long long> char2_closed_a(std::uint32_t k, std::uint32_t n) {
    long long k2 = static_cast<long long>(k) * k;
    if (n == 2) return (k2 - 1) / 8;
    if (n == 3) return (k2 - 1) * (k + 1) / 8;
    return std::nullopt;
}

HumbertDiagonal char3_humbert(const Curve& curve) {
    if (curve->field->p != 3 || curve->k != 2 || curve->n != 4)
        fail(errc::wrong_characteristic, "needs p = 3, k = 2, n = 4");
    const Field& f = curve->field;
    const FieldElement one = FieldElement::one(f);
    const FieldElement l1 = curve->lambdas[0];
    const FieldElement l2 = curve->lambdas[1];

    HumbertDiagonal h;
    h.order = canonical_subset(curve);
    // Cartier eigenvalues of the five canonical forms; the first two carry
    // the sign contributed by an odd number of y-generators.
    h.diag = {
        -(l1 * l2 + l1 + l2).pth_root(),
        -(one + l1 + l2).pth_root(),
        (l1 + l2).pth_root(),
        (one + l2).pth_root(),
        (one + l1).pth_root(),
    };
    h.a = 0;
    for (const auto& d : h.diag)
        if (d.is_zero()) ++h.a;
    h.gamma = 5 - h.a;
    return h;
}

FunctionFieldElement char3_k2_image(const BasisIndex& idx, const Curve& curve) {
    if (curve->field->p != 3 || curve->k != 2)
        fail(errc::wrong_characteristic, "closed form needs p = 3 and k = 2");
    if (curve->n < 3) fail(errc::out_of_range, "closed form stated for n >= 3");
    if (idx.alphas.size() != curve->n - 1)
        fail(errc::out_of_range, "basis index arity does not match the curve");
    const Field& f = curve->field;

    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < idx.alphas.size(); ++i) {
        if (idx.alphas[i] > 1) fail(errc::out_of_range, "alpha exponent out of range for k = 2");
        if (idx.alphas[i] == 1) ones.push_back(i);
    }

    // squares y_t^2 reduce to the rational values -(delta_t + z^2)
    std::vector<RationalFunction> squares;
    for (auto i : ones)
        squares.push_back(curve->relation_value(static_cast<std::uint32_t>(i + 3)));

    auto product_excluding = [&](std::size_t skip1, std::size_t skip2) {
        RationalFunction p = RationalFunction::one(f);
        for (std::size_t t = 0; t < squares.size(); ++t)
            if (t != skip1 && t != skip2) p = p * squares[t];
        return p;
    };

    const std::uint64_t r = idx.r;
    const std::size_t w = squares.size();
    RationalFunction q = RationalFunction::zero(f);

    RationalFunction pair_sum = RationalFunction::zero(f);
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = i + 1; j < w; ++j) pair_sum = pair_sum + product_excluding(i, j);
    q = q + pair_sum * RationalFunction(Polynomial::monomial(FieldElement::one(f), r + 2));

    RationalFunction single_sum = RationalFunction::zero(f);
    for (std::size_t j = 0; j < w; ++j) single_sum = single_sum + product_excluding(j, j);
    q = q + single_sum * RationalFunction(Polynomial::monomial(
                             FieldElement::from_int(f, 2 + r), r));

    std::uint64_t rr = 2 * (r % 3) * ((r + 2) % 3) % 3; // 2r(r-1) mod 3
    if (rr != 0) {
        // r >= 2 here: the scalar 2r(r-1) vanishes for r in {0,1}
        RationalFunction full = product_excluding(w, w);
        q = q + full * RationalFunction(Polynomial::monomial(
                           FieldElement::from_int(f, rr), static_cast<std::size_t>(r - 2)));
    }

    FunctionFieldElement root = FunctionFieldElement::from_rational(curve, q).pth_root();

    FunctionFieldElement::Key denom_key(idx.alphas.size(), 0);
    for (auto i : ones) denom_key[i] = 1;
    auto denom = FunctionFieldElement::term(curve, denom_key, RationalFunction::one(f));
    return root * denom.inverse_single_term();
}

} // namespace gfc
