#include "toda/matrix.hpp"

#include <ostream>
#include <string>

namespace toda {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidInput(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InvalidInput("matrix data does not match its shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const noexcept {
    for (Scalar x : data_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
    Matrix m(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
    return m;
}

Matrix Matrix::col_range(std::size_t begin, std::size_t end) const {
    Matrix m(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
    return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

Matrix multiply(const Ring& R, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw InvalidInput("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                           std::to_string(b.rows()) + " differ");
    Matrix out(a.rows(), b.cols());
    const bool field = R.is_field();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar x = a(i, k);
            if (x == 0) continue;
            auto brow = b.row(k);
            auto orow = out.row(i);
            if (field) {
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (brow[j]) orow[j] = (orow[j] + x * brow[j]) % R.characteristic();
            } else {
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (brow[j]) orow[j] = R.add(orow[j], R.mul(x, brow[j]));
            }
        }
    }
    return field ? reduce(R, out) : out;
}

Matrix add(const Ring& R, const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = R.add(a(r, c), b(r, c));
    return out;
}

Matrix subtract(const Ring& R, const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "subtract");
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = R.sub(a(r, c), b(r, c));
    return out;
}

Matrix scale(const Ring& R, Scalar s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = R.mul(s, a(r, c));
    return out;
}

Matrix negate(const Ring& R, const Matrix& a) { return scale(R, -1, a); }

Matrix reduce(const Ring& R, const Matrix& a) {
    if (!R.is_field()) return a;
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = R.reduce(a(r, c));
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw InvalidInput("hstack: row count mismatch");
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        paste(out, b, 0, c0);
        c0 += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw InvalidInput("vstack: column count mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        paste(out, b, r0, 0);
        r0 += b.rows();
    }
    return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        paste(out, b, r0, c0);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

void paste(Matrix& dst, const Matrix& src, std::size_t r0, std::size_t c0) {
    if (r0 + src.rows() > dst.rows() || c0 + src.cols() > dst.cols())
        throw InvalidInput("paste: block does not fit");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) dst(r0 + r, c0 + c) = src(r, c);
}

std::vector<Scalar> apply(const Ring& R, const Matrix& a, std::span<const Scalar> x) {
    if (x.size() != a.cols()) throw InvalidInput("apply: vector length mismatch");
    std::vector<Scalar> y(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Scalar acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) && x[c]) acc = R.add(acc, R.mul(a(r, c), x[c]));
        y[r] = acc;
    }
    return y;
}

}  // namespace toda
