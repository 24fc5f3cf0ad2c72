#pragma once

// Exact arithmetic in finite fields F_{p^m}, presented as F_p[t]/(modulus).
// Field presentations are canonical: when no modulus is supplied, the first
// irreducible monic polynomial of degree m (in ascending coefficient
// encoding) is selected, so runs are reproducible across machines.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gfc/error.hpp"

namespace gfc {

struct FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Immutable description of F_{p^m}. Share via `Field`; never mutate.
struct FieldSpec {
    std::uint32_t p;                    // prime characteristic
    std::uint32_t m;                    // extension degree over F_p
    std::vector<std::uint32_t> modulus; // m+1 coefficients, constant term first, monic
    std::uint64_t order;                // p^m

    bool same_as(const FieldSpec& other) const {
        return p == other.p && m == other.m && modulus == other.modulus;
    }
};

/// Build F_{p^m}. With no modulus the canonical one is chosen; a supplied
/// modulus must be monic of degree m and is verified irreducible.
Field make_field(std::uint32_t p, std::uint32_t m,
                 const std::vector<std::uint32_t>& modulus = {});

/// "p^m:c0,c1,...,cm" (modulus part optional; canonical modulus then).
Field parse_field(const std::string& text);
std::string field_to_string(const Field& f);

class FieldElement {
public:
    FieldElement() = default; // detached; only assignment is valid afterwards

    FieldElement(Field field, std::vector<std::uint32_t> coeffs);

    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    /// Integer encoding sum c_i p^i; the canonical enumeration order of the field.
    static FieldElement from_encoding(const Field& f, std::uint64_t enc);
    static FieldElement from_int(const Field& f, std::uint64_t value); // value mod p, as a constant

    const Field& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::uint64_t encoding() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    /// x -> x^p (the Frobenius automorphism).
    FieldElement frobenius() const;
    /// The unique r with r^p = *this; equals Frobenius applied m-1 times.
    FieldElement pth_root() const;

    /// "c0,c1,...,c_{m-1}", constant term first.
    std::string to_string() const;

private:
    void check_compatible(const FieldElement& o) const;

    Field field_;
    std::vector<std::uint32_t> c_; // exactly m residues in [0,p)
};

FieldElement parse_element(const Field& f, const std::string& text);

/// First ω (in encoding order) of multiplicative order exactly k.
/// Requires k | p^m - 1, otherwise throws no_such_root.
FieldElement primitive_kth_root(const Field& f, std::uint32_t k);

bool is_prime_u32(std::uint32_t n);

} // namespace gfc
