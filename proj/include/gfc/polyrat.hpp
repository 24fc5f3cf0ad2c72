#pragma once

// Univariate polynomials and reduced rational functions over F_{p^m},
// with formal differentiation and exact p-th roots.

#include <string>
#include <vector>

#include "gfc/ff.hpp"

namespace gfc {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Field f) : field_(std::move(f)) {}
    Polynomial(Field f, std::vector<FieldElement> coeffs);

    static Polynomial zero(const Field& f) { return Polynomial(f); }
    static Polynomial constant(const FieldElement& c);
    static Polynomial one(const Field& f) { return constant(FieldElement::one(f)); }
    /// The polynomial z.
    static Polynomial variable(const Field& f);
    /// c * z^e
    static Polynomial monomial(const FieldElement& c, std::size_t e);

    const Field& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(std::size_t i) const; // 0 beyond the degree
    FieldElement leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const FieldElement& s) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Quotient and remainder; o must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& o) const;
    Polynomial monic() const;
    Polynomial derivative() const;
    Polynomial pow(std::uint64_t e) const;
    /// Exact p-th root; throws not_a_pth_power if some exponent with a
    /// nonzero coefficient is not divisible by p.
    Polynomial pth_root() const;

    std::string to_string() const; // residues of all coefficients, comma-joined

private:
    void trim();

    Field field_;
    std::vector<FieldElement> c_; // constant first, no trailing zeros
};

Polynomial poly_gcd(Polynomial a, Polynomial b); // monic gcd
Polynomial parse_polynomial(const Field& f, const std::string& text);

/// Reduced fraction num/den: den monic, gcd(num, den) = 1, zero = 0/1.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero(const Field& f) { return RationalFunction(Polynomial::zero(f)); }
    static RationalFunction one(const Field& f) { return RationalFunction(Polynomial::one(f)); }
    static RationalFunction constant(const FieldElement& c) {
        return RationalFunction(Polynomial::constant(c));
    }
    static RationalFunction variable(const Field& f) {
        return RationalFunction(Polynomial::variable(f));
    }

    const Field& field() const { return num_.field(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(const FieldElement& s) const;
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction inverse() const;
    /// Formal d/dz applied `times` times (quotient rule, reduced each step).
    RationalFunction derivative(std::uint32_t times = 1) const;
    RationalFunction pow(std::int64_t e) const; // negative e inverts first
    RationalFunction pth_root() const;

    std::string to_string() const; // "num|den", or just "num" when den = 1

private:
    void normalize();

    Polynomial num_, den_;
};

RationalFunction parse_rational(const Field& f, const std::string& text);

} // namespace gfc
