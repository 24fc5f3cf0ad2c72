#include "gfc/cartier.hpp"

namespace gfc {

FunctionFieldElement cartier_apply(const FunctionFieldElement& f, const Curve& curve) {
    FunctionFieldElement d = f;
    for (std::uint32_t i = 0; i + 1 < curve->field->p; ++i) d = d.derivative();
    return (-d).pth_root();
}

CartierMatrix cartier_matrix(const Curve& curve) {
    CartierMatrix cm;
    cm.curve = curve;
    cm.basis = enumerate_basis(curve);
    const std::size_t g = cm.basis.size();
    cm.entries = Matrix(curve->field, g, g);

    for (std::size_t col = 0; col < g; ++col) {
        FunctionFieldElement image = cartier_apply(theta_form(cm.basis[col], curve), curve);
        for (const auto& [idx, value] : decompose_in_basis(image, curve)) {
            auto it = std::lower_bound(cm.basis.begin(), cm.basis.end(), idx);
            if (it == cm.basis.end() || *it != idx)
                fail(errc::not_in_span, "Cartier image of " + cm.basis[col].to_string() +
                                            " leaves the holomorphic span");
            cm.entries.at(static_cast<std::size_t>(it - cm.basis.begin()), col) = value;
        }
    }
    return cm;
}

long long a_number(const CartierMatrix& cm) {
    return static_cast<long long>(cm.basis.size()) -
           static_cast<long long>(cm.entries.rank());
}

long long a_number(const Curve& curve) { return a_number(cartier_matrix(curve)); }

long long p_rank(const CartierMatrix& cm) {
    const std::size_t g = cm.basis.size();
    Matrix iterate = cm.entries;
    // rank is non-increasing under iteration and stabilizes within g steps
    for (std::size_t t = 1; t < g; ++t)
        iterate = cm.entries * iterate.entrywise_pth_root();
    return static_cast<long long>(iterate.rank());
}

long long p_rank(const Curve& curve) { return p_rank(cartier_matrix(curve)); }

std::vector<std::vector<FieldElement>> kernel_basis(const CartierMatrix& cm) {
    auto vectors = cm.entries.nullspace();
    for (auto& v : vectors)
        for (auto& x : v) x = x.frobenius();
    return vectors;
}

std::vector<std::vector<FieldElement>> kernel_basis(const Curve& curve) {
    return kernel_basis(cartier_matrix(curve));
}

HasseWittSplit hw_split(const CartierMatrix& cm) {
    HasseWittSplit s;
    s.semisimple = p_rank(cm);
    s.nilpotent = static_cast<long long>(cm.basis.size()) - s.semisimple;
    s.nilpotent_dim_equals_a = (s.nilpotent == a_number(cm));
    return s;
}

HasseWittSplit hw_split(const Curve& curve) { return hw_split(cartier_matrix(curve)); }

} // namespace gfc
