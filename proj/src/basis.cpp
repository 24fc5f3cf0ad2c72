#include "gfc/basis.hpp"

#include <sstream>

namespace gfc {

std::uint32_t BasisIndex::alpha_sum() const {
    std::uint32_t s = 0;
    for (auto a : alphas) s += a;
    return s;
}

std::string BasisIndex::to_string() const {
    std::string s = std::to_string(r) + ";";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alphas[i]);
    }
    return s;
}

BasisIndex parse_basis_index(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) fail(errc::parse_error, "basis index needs 'r;alphas'");
    BasisIndex idx;
    try {
        idx.r = static_cast<std::uint32_t>(std::stoul(text.substr(0, semi)));
        std::stringstream ss(text.substr(semi + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            idx.alphas.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad basis index '" + text + "'");
    }
    return idx;
}

bool index_is_holomorphic(const BasisIndex& idx, std::uint32_t k) {
    for (auto a : idx.alphas)
        if (a >= k) return false;
    std::uint32_t s = idx.alpha_sum();
    return s >= 2 && idx.r <= s - 2;
}

namespace {

void require_positive_genus(const Curve& curve) {
    if (static_cast<std::uint64_t>(curve->k - 1) * (curve->n - 1) < 2)
        fail(errc::genus_too_small, "type (" + std::to_string(curve->k) + "," +
                                        std::to_string(curve->n) + ") has genus 0");
}

} // namespace

std::vector<BasisIndex> enumerate_basis(const Curve& curve) {
    require_positive_genus(curve);
    const std::uint32_t k = curve->k;
    const std::uint32_t len = curve->n - 1;
    std::vector<BasisIndex> out;
    std::vector<std::uint32_t> alphas(len, 0);
    for (;;) {
        std::uint32_t sum = 0;
        for (auto a : alphas) sum += a;
        if (sum >= 2)
            for (std::uint32_t r = 0; r + 2 <= sum; ++r) out.push_back({r, alphas});
        // lexicographic successor
        std::size_t i = len;
        while (i > 0 && alphas[i - 1] == k - 1) alphas[--i] = 0;
        if (i == 0) break;
        ++alphas[i - 1];
    }
    return out;
}

long long tuple_sum_count(std::uint32_t k, std::uint32_t n, std::uint32_t l) {
    if (l > (k - 1) * (n - 1))
        fail(errc::out_of_range, "sum " + std::to_string(l) + " exceeds (k-1)(n-1)");
    // counts[s] = tuples of the prefix summing to s
    std::vector<long long> counts{1};
    for (std::uint32_t slot = 0; slot + 1 < n; ++slot) {
        std::vector<long long> next(counts.size() + k - 1, 0);
        for (std::size_t s = 0; s < counts.size(); ++s)
            for (std::uint32_t d = 0; d < k; ++d) next[s + d] += counts[s];
        counts = std::move(next);
    }
    return counts[l];
}

long long genus_from_counting(std::uint32_t k, std::uint32_t n) {
    long long total = 0;
    for (std::uint32_t l = 2; l <= (k - 1) * (n - 1); ++l)
        total += static_cast<long long>(l - 1) * tuple_sum_count(k, n, l);
    return total;
}

std::vector<long long> theta_divisor(const BasisIndex& idx, const Curve& curve) {
    std::vector<long long> c(curve->n + 1);
    c[0] = static_cast<long long>(idx.alpha_sum()) - 2 - idx.r;
    c[1] = idx.r;
    for (std::size_t j = 0; j < idx.alphas.size(); ++j)
        c[2 + j] = static_cast<long long>(curve->k) - 1 - idx.alphas[j];
    return c;
}

std::vector<std::uint32_t> theta_character(const BasisIndex& idx, const Curve& curve) {
    const long long k = curve->k;
    auto mod = [k](long long v) { return static_cast<std::uint32_t>(((v % k) + k) % k); };
    std::vector<std::uint32_t> e(curve->n + 1);
    e[0] = mod(static_cast<long long>(idx.r) + 1 - idx.alpha_sum());
    e[1] = mod(-static_cast<long long>(idx.r) - 1);
    for (std::size_t j = 0; j < idx.alphas.size(); ++j) e[2 + j] = mod(idx.alphas[j]);
    return e;
}

FunctionFieldElement theta_form(const BasisIndex& idx, const Curve& curve) {
    if (idx.alphas.size() != curve->n - 1)
        fail(errc::out_of_range, "basis index arity does not match the curve");
    const Field& f = curve->field;
    FunctionFieldElement::Key key(idx.alphas.size(), 0);
    RationalFunction coeff(Polynomial::monomial(FieldElement::one(f), idx.r));
    for (std::size_t i = 0; i < idx.alphas.size(); ++i) {
        std::uint32_t a = idx.alphas[i];
        if (a == 0) continue;
        if (a >= curve->k) fail(errc::out_of_range, "alpha exponent out of range");
        key[i] = curve->k - a;
        coeff = coeff / curve->relation_value(static_cast<std::uint32_t>(i + 3));
    }
    return FunctionFieldElement::term(curve, std::move(key), coeff);
}

std::vector<std::pair<BasisIndex, FieldElement>>
decompose_in_basis(const FunctionFieldElement& form, const Curve& curve) {
    std::vector<std::pair<BasisIndex, FieldElement>> out;
    for (const auto& [key, coeff] : form.terms()) {
        BasisIndex idx;
        idx.alphas.resize(key.size());
        RationalFunction cleared = coeff;
        std::uint32_t alpha_sum = 0;
        for (std::size_t i = 0; i < key.size(); ++i) {
            // a zero exponent always decodes to alpha = 0, never alpha = k
            idx.alphas[i] = key[i] ? curve->k - key[i] : 0;
            alpha_sum += idx.alphas[i];
            if (key[i])
                cleared = cleared * curve->relation_value(static_cast<std::uint32_t>(i + 3));
        }
        if (!cleared.is_polynomial())
            fail(errc::not_in_span, "coefficient at key is not polynomial after clearing");
        const Polynomial& poly = cleared.num(); // denominator is monic, hence exactly 1
        if (alpha_sum < 2 || poly.degree() > static_cast<int>(alpha_sum) - 2)
            fail(errc::not_in_span, "polynomial degree exceeds alpha sum - 2");
        for (int r = 0; r <= poly.degree(); ++r) {
            if (poly.coeff(r).is_zero()) continue;
            BasisIndex at{static_cast<std::uint32_t>(r), idx.alphas};
            out.emplace_back(std::move(at), poly.coeff(r));
        }
    }
    return out;
}

std::vector<FieldElement> basis_coordinates(const FunctionFieldElement& form,
                                            const Curve& curve) {
    auto basis = enumerate_basis(curve);
    std::vector<FieldElement> coords(basis.size(), FieldElement::zero(curve->field));
    auto sparse = decompose_in_basis(form, curve);
    for (const auto& [idx, value] : sparse) {
        auto it = std::lower_bound(basis.begin(), basis.end(), idx);
        if (it == basis.end() || *it != idx)
            fail(errc::not_in_span, "index " + idx.to_string() + " outside the basis");
        coords[static_cast<std::size_t>(it - basis.begin())] = value;
    }
    return coords;
}

std::vector<BasisIndex> canonical_subset(const Curve& curve) {
    const std::uint32_t n = curve->n;
    if (curve->genus <= 1)
        fail(errc::genus_too_small, "canonical subset needs genus > 1");
    std::vector<BasisIndex> out;
    if (n >= 4) {
        std::vector<std::uint32_t> ones(n - 1, 1);
        out.push_back({0, ones});
        out.push_back({1, ones});
        for (std::uint32_t j = 0; j + 1 < n; ++j) {
            std::vector<std::uint32_t> a(ones);
            a[j] = 0;
            out.push_back({0, std::move(a)});
        }
    } else if (n == 3) {
        out.push_back({0, {2, 2}});
        out.push_back({1, {2, 2}});
        out.push_back({0, {1, 2}});
        out.push_back({0, {2, 1}});
    } else {
        out.push_back({0, {3}});
        out.push_back({1, {3}});
        out.push_back({0, {2}});
    }
    return out;
}

} // namespace gfc
