#pragma once

// Dense matrices over F_{p^m} with the deterministic elimination used by the
// rank and nullspace computations: pivots are chosen as the first nonzero
// entry in row order, so results are reproducible.

#include <cstddef>
#include <vector>

#include "gfc/ff.hpp"

namespace gfc {

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_diagonal() const;

    std::size_t rank() const;
    /// Basis of {x : Mx = 0}, one vector per free column, ordered by the
    /// free column index.
    std::vector<std::vector<FieldElement>> nullspace() const;

    Matrix entrywise_pth_root() const;
    Matrix entrywise_pth_power() const;

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

} // namespace gfc
