#pragma once

// The generalized Fermat curve of type (k,n) with branch set
// {inf, 0, 1, lambda_1, ..., lambda_{n-2}}, and exact arithmetic in its
// function field.  The function field is the free K(z)-module on the
// monomials y_3^{b_3} ... y_{n+1}^{b_{n+1}}, 0 <= b_j < k, reduced by the
// defining relations y_j^k = -(delta_j + z^k) where delta_3 = 1 and
// delta_{3+i} = lambda_i.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gfc/polyrat.hpp"

namespace gfc {

/// Exact genus 1 + (k^{n-1}/2)((k-1)(n-1) - 2) of the type-(k,n) curve.
long long curve_genus(std::uint32_t k, std::uint32_t n);

struct CurveSpec {
    Field field;
    std::uint32_t k; // covering order, coprime to the characteristic
    std::uint32_t n; // number of branch points minus one
    std::vector<FieldElement> lambdas; // n-2 entries, pairwise distinct, not 0 or 1
    std::vector<FieldElement> deltas;  // n-1 entries: 1, lambda_1, ..., lambda_{n-2}
    long long genus;
    std::uint32_t p_inv_mod_k; // inverse of the characteristic modulo k

    /// delta_j + z^k for the generator index j in [3, n+1].
    Polynomial branch_polynomial(std::uint32_t j) const;
    /// The reduced value of y_j^k, namely -(delta_j + z^k).
    RationalFunction relation_value(std::uint32_t j) const;

    bool same_as(const CurveSpec& o) const;
};

using Curve = std::shared_ptr<const CurveSpec>;

Curve make_curve(Field field, std::uint32_t k, std::uint32_t n,
                 std::vector<FieldElement> lambdas);

/// "p^m:modulus;k;n;lambda-residues" -- the lambda part is a flat residue
/// list chunked into m residues per element; absent when n = 2.
Curve parse_curve(const std::string& text);
std::string curve_to_string(const Curve& c);

/// Element of the function field as a finite map from exponent vectors
/// (b_3, ..., b_{n+1}) in {0..k-1}^{n-1} to rational functions in z.
/// Keys iterate in lexicographic order; zero coefficients are never stored.
class FunctionFieldElement {
public:
    using Key = std::vector<std::uint32_t>;
    using TermMap = std::map<Key, RationalFunction>;

    FunctionFieldElement() = default;
    explicit FunctionFieldElement(Curve c) : curve_(std::move(c)) {}

    static FunctionFieldElement zero(const Curve& c) { return FunctionFieldElement(c); }
    static FunctionFieldElement one(const Curve& c);
    static FunctionFieldElement from_rational(const Curve& c, const RationalFunction& r);
    static FunctionFieldElement z_map(const Curve& c);
    /// The generator y_j, j in [3, n+1].
    static FunctionFieldElement generator(const Curve& c, std::uint32_t j);
    /// r(z) * y^key, with key entries reduced mod k.
    static FunctionFieldElement term(const Curve& c, Key key, const RationalFunction& r);

    const Curve& curve() const { return curve_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }

    FunctionFieldElement operator-() const;
    FunctionFieldElement operator+(const FunctionFieldElement& o) const;
    FunctionFieldElement operator-(const FunctionFieldElement& o) const;
    FunctionFieldElement operator*(const FunctionFieldElement& o) const;
    FunctionFieldElement operator*(const RationalFunction& s) const;
    FunctionFieldElement operator*(const FieldElement& s) const;
    bool operator==(const FunctionFieldElement& o) const;
    bool operator!=(const FunctionFieldElement& o) const { return !(*this == o); }

    FunctionFieldElement pow(std::uint64_t e) const;

    /// Formal d/dz.  Uses dy_j/dz = z^{k-1} y_j / (delta_j + z^k), so every
    /// term keeps its exponent vector.
    FunctionFieldElement derivative() const;

    /// Exact p-th root.  The p-th power of s y^b sits at key p*b mod k with
    /// coefficient s^p prod_j relation_value(j)^floor(p b_j / k); this map is
    /// inverted keywise (p is invertible mod k).  Throws not_a_pth_power.
    FunctionFieldElement pth_root() const;

    /// Inverse of a single-term element: (s y^b)^{-1} =
    /// s^{-1} prod_{b_j>0} y_j^{k-b_j} relation_value(j)^{-1}.
    FunctionFieldElement inverse_single_term() const;

    std::string to_string() const;

private:
    void add_term(const Key& key, const RationalFunction& r);
    void check_compatible(const FunctionFieldElement& o) const;

    Curve curve_;
    TermMap terms_;
};

enum class LambdaMove {
    invert,     // componentwise 1/lambda_j (the branch set {inf,0,1,lams} maps under w -> 1/w)
    pivot_last, // send lambda_{n-2} to infinity: (l/(l-1), l/(l-lam_1), ..., l/(l-lam_{n-3}))
};

/// Image of a lambda-tuple under a moduli equivalence; the transformed curve
/// is isomorphic to the original one.
std::vector<FieldElement> moduli_transform(const std::vector<FieldElement>& lambdas,
                                           LambdaMove move);

} // namespace gfc
