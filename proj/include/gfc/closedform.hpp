#pragma once

// Closed-form evaluation of the Cartier operator on standard basis elements
// in small characteristic, used as an independent check of the general
// derivative-and-root algorithm, plus the exact invariant formulas that come
// with those evaluations.

#include <optional>
#include <vector>

#include "gfc/basis.hpp"

namespace gfc {

struct WeightedBasisTerm {
    FieldElement coeff; // never zero
    BasisIndex idx;     // always holomorphic
};

/// Characteristic-2 image of theta_{r;alpha} as an explicit combination of
/// basis elements, driven by the parity pattern of r and the alphas.  With
/// A = {j : alpha_j odd} and hatature alpha_j = alpha_j (+k when j in A), the
/// image is a sum over s of e_{#A-2s-1}^{1/2} (r even) or e_{#A-2s}^{1/2}
/// (r odd) times theta at r' = sk + (r+k-1)/2 resp. sk + (r-1)/2 and
/// exponents hat-alpha/2, where e_d is the d-th elementary symmetric
/// polynomial of {delta_j : j in A}.  Requires p = 2 and odd k.
std::vector<WeightedBasisTerm> char2_image(const BasisIndex& idx, const Curve& curve);

/// (n-1)(k-1)(k+1)^{n-1} / 2^{n+1}: the number of basis indices with r and
/// all alphas even, a lower bound for the a-number in characteristic 2.
long long char2_lower_bound(std::uint32_t k, std::uint32_t n);

/// Closed-form characteristic-2 a-number prediction: (k^2-1)/8 for n = 2 and
/// (k^2-1)(k+1)/8 for n = 3; absent otherwise.  The n = 2 value is exact for
/// every odd k.  The n = 3 value is exact only for k = 3: from k = 5 on the
/// kernel is strictly larger (theta_{0;k-2,k-1} - theta_{k;k-2,k-1} and its
/// mirror are exact forms the prediction misses).
std::optional<long long> char2_closed_a(std::uint32_t k, std::uint32_t n);

struct HumbertDiagonal {
    std::vector<BasisIndex> order; // the canonical n+1 basis elements
    std::vector<FieldElement> diag;
    long long a;     // number of vanishing diagonal entries
    long long gamma; // 5 - a
};

/// Characteristic-3 genus-5 case (k = 2, n = 4): the Cartier matrix is
/// diagonal on the canonical subset; returns the five entries exactly.
HumbertDiagonal char3_humbert(const Curve& curve);

/// Characteristic-3, k = 2 closed form for any n >= 3: the image of
/// theta_{r;alpha} is Q^{1/3} / prod y_j^{alpha_j} where Q collects the
/// three z-shifted symmetric sums of the squares y_t^2 over {t : alpha_t=1}:
///   Q = z^{r+2} sum_{i<j} prod_{t != i,j} y_t^2
///     + (2+r)  z^r     sum_j   prod_{s != j} y_s^2
///     + 2r(r-1) z^{r-2} prod_j y_j^2          (term absent for r in {0,1}).
FunctionFieldElement char3_k2_image(const BasisIndex& idx, const Curve& curve);

} // namespace gfc
