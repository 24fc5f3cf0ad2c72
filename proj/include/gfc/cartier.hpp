#pragma once

// The Cartier operator on differentials of the curve.  On omega = f dz it
// acts by f -> (-(d/dz)^{p-1} f)^{1/p}; this is 1/p-semilinear, so with
// respect to the standard basis it is the matrix M composed with entrywise
// Frobenius inverse on coordinates: coords -> M * coords^{(1/p)}.

#include <vector>

#include "gfc/basis.hpp"
#include "gfc/matrix.hpp"

namespace gfc {

/// Image of the form with coefficient f under the Cartier operator,
/// returned again as a dz-coefficient.  Holomorphic inputs always succeed;
/// not_a_pth_power signals a coefficient outside the operator's domain.
FunctionFieldElement cartier_apply(const FunctionFieldElement& f, const Curve& curve);

struct CartierMatrix {
    Curve curve;
    std::vector<BasisIndex> basis; // enumerate_basis order
    Matrix entries;                // column i = coordinates of the image of basis[i]
};

CartierMatrix cartier_matrix(const Curve& curve);

/// dim ker C = genus - rank(M): the space of exact holomorphic forms.
long long a_number(const CartierMatrix& cm);
long long a_number(const Curve& curve);

/// Stable rank of the iterated semilinear operator; the dimension of the
/// semisimple part and the p-rank of the jacobian. Computed from
/// N_1 = M, N_{t+1} = M * N_t^{(1/p)}, iterated genus times.
long long p_rank(const CartierMatrix& cm);
long long p_rank(const Curve& curve);

/// Deterministic basis of {c : M c^{(1/p)} = 0}: the entrywise p-th power of
/// a nullspace basis of M.
std::vector<std::vector<FieldElement>> kernel_basis(const CartierMatrix& cm);
std::vector<std::vector<FieldElement>> kernel_basis(const Curve& curve);

struct HasseWittSplit {
    long long semisimple;        // dim of the part where the operator stays invertible
    long long nilpotent;         // genus - semisimple
    bool nilpotent_dim_equals_a; // whether dim ker C already equals the nilpotent part
};

HasseWittSplit hw_split(const CartierMatrix& cm);
HasseWittSplit hw_split(const Curve& curve);

} // namespace gfc
