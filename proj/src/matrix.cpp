#include "gfc/matrix.hpp"

namespace gfc {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      e_(rows * cols, FieldElement::zero(field_)) {}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(errc::out_of_range, "matrix dimensions do not match");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const FieldElement& mil = at(i, l);
            if (mil.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + mil * o.at(l, j);
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

namespace {

// reduced row echelon form in place; returns the pivot column of each pivot row
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix work = *this;
    return rref(work).size();
}

std::vector<std::vector<FieldElement>> Matrix::nullspace() const {
    Matrix work = *this;
    std::vector<std::size_t> pivots = rref(work);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> out;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
        v[free_col] = FieldElement::one(field_);
        for (std::size_t prow = 0; prow < pivots.size(); ++prow)
            v[pivots[prow]] = -work.at(prow, free_col);
        out.push_back(std::move(v));
    }
    return out;
}

Matrix Matrix::entrywise_pth_root() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x.pth_root();
    return r;
}

Matrix Matrix::entrywise_pth_power() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x.frobenius();
    return r;
}

} // namespace gfc
