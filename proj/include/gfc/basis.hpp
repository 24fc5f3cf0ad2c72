#pragma once

// The standard basis {theta_{r;alpha}} of holomorphic forms: the form
// theta_{r;alpha} is z^r dz / (y_3^{a_3} ... y_{n+1}^{a_{n+1}}), and it is
// holomorphic exactly when every a_j < k and 0 <= r <= sum(alpha) - 2.

#include <cstdint>
#include <string>
#include <vector>

#include "gfc/curve.hpp"

namespace gfc {

struct BasisIndex {
    std::uint32_t r = 0;
    std::vector<std::uint32_t> alphas; // exponents a_3 .. a_{n+1}

    std::uint32_t alpha_sum() const;

    bool operator==(const BasisIndex& o) const { return r == o.r && alphas == o.alphas; }
    bool operator!=(const BasisIndex& o) const { return !(*this == o); }
    /// Lexicographic by alphas, then r: the canonical machine order.
    bool operator<(const BasisIndex& o) const {
        if (alphas != o.alphas) return alphas < o.alphas;
        return r < o.r;
    }

    std::string to_string() const; // "r;a3,a4,...,a_{n+1}"
};

BasisIndex parse_basis_index(const std::string& text);

/// Membership of (r;alpha) in the holomorphy index set of the type-(k,n) curve.
bool index_is_holomorphic(const BasisIndex& idx, std::uint32_t k);

/// All holomorphic indices in canonical order; size equals the genus.
std::vector<BasisIndex> enumerate_basis(const Curve& curve);

/// Number of (n-1)-tuples in {0..k-1} with coordinate sum l.
long long tuple_sum_count(std::uint32_t k, std::uint32_t n, std::uint32_t l);

/// Genus recomputed by pure counting: sum over l >= 2 of (l-1) tuple counts.
long long genus_from_counting(std::uint32_t k, std::uint32_t n);

/// Coefficients of the divisor of theta_{r;alpha} on the fixed-point divisors
/// of the n+1 standard generators; negative entries flag a pole.
std::vector<long long> theta_divisor(const BasisIndex& idx, const Curve& curve);

/// Eigenvalue exponents of the n+1 standard generators acting on the form.
/// Entries are residues mod k and always sum to 0 mod k.
std::vector<std::uint32_t> theta_character(const BasisIndex& idx, const Curve& curve);

/// The coefficient f of theta = f dz as a function field element:
/// z^r prod_{a_j > 0} y_j^{k - a_j} / ( -(delta_j + z^k) ).
FunctionFieldElement theta_form(const BasisIndex& idx, const Curve& curve);

/// Sparse inverse of theta_form: the coordinates of a form in the standard
/// basis. Throws not_in_span when the form is not a holomorphic combination.
std::vector<std::pair<BasisIndex, FieldElement>>
decompose_in_basis(const FunctionFieldElement& form, const Curve& curve);

/// Dense coordinate vector (length genus) in enumerate_basis order.
std::vector<FieldElement> basis_coordinates(const FunctionFieldElement& form,
                                            const Curve& curve);

/// The n+1 basis elements whose projective tuple reproduces the ambient
/// coordinates of the curve model (quotients give back z and the y_j).
std::vector<BasisIndex> canonical_subset(const Curve& curve);

} // namespace gfc
