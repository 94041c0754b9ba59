#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "toda/ring.hpp"

namespace toda {

/// Dense row-major matrix of exact scalars. Ring arithmetic is supplied by the
/// caller; the matrix itself is a plain value type.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    const std::vector<Scalar>& data() const noexcept { return data_; }

    bool is_zero() const noexcept;

    Matrix transpose() const;
    Matrix row_range(std::size_t begin, std::size_t end) const;
    Matrix col_range(std::size_t begin, std::size_t end) const;
    Matrix column(std::size_t c) const { return col_range(c, c + 1); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Ring-aware arithmetic. Shapes are checked and mismatches throw InvalidInput.
Matrix multiply(const Ring& R, const Matrix& a, const Matrix& b);
Matrix add(const Ring& R, const Matrix& a, const Matrix& b);
Matrix subtract(const Ring& R, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& R, Scalar s, const Matrix& a);
Matrix negate(const Ring& R, const Matrix& a);
Matrix reduce(const Ring& R, const Matrix& a);

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
/// Copies `src` into `dst` with its top-left corner at (r0, c0).
void paste(Matrix& dst, const Matrix& src, std::size_t r0, std::size_t c0);

std::vector<Scalar> apply(const Ring& R, const Matrix& a, std::span<const Scalar> x);

}  // namespace toda
