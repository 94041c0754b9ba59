#include "toda/smith.hpp"

#include <cstdlib>
#include <utility>

namespace toda {

namespace {

Scalar abs_value(Scalar x) {
    if (x == INT64_MIN) throw OverflowError("integer overflow in absolute value");
    return x < 0 ? -x : x;
}

Scalar floor_div(Scalar a, Scalar b) {
    Scalar q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Working state of the reduction. Row operations on A are mirrored on U (as
// row operations) and on U_inv (as inverse column operations); likewise for
// column operations with V and V_inv.
class Reducer {
public:
    Reducer(const Ring& R, const Matrix& a, bool transforms)
        : R_(R), A_(reduce(R, a)), transforms_(transforms) {
        if (transforms_) {
            U_ = Matrix::identity(a.rows());
            Ui_ = Matrix::identity(a.rows());
            V_ = Matrix::identity(a.cols());
            Vi_ = Matrix::identity(a.cols());
        }
    }

    // row_i += c * row_j
    void row_add(std::size_t i, std::size_t j, Scalar c) {
        if (c == 0) return;
        add_row(A_, i, j, c);
        if (transforms_) {
            add_row(U_, i, j, c);
            add_col(Ui_, j, i, R_.neg(c));
        }
    }
    // col_i += c * col_j
    void col_add(std::size_t i, std::size_t j, Scalar c) {
        if (c == 0) return;
        add_col(A_, i, j, c);
        if (transforms_) {
            add_col(V_, i, j, c);
            add_row(Vi_, j, i, R_.neg(c));
        }
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        swap_rows(A_, i, j);
        if (transforms_) {
            swap_rows(U_, i, j);
            swap_cols(Ui_, i, j);
        }
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        swap_cols(A_, i, j);
        if (transforms_) {
            swap_cols(V_, i, j);
            swap_rows(Vi_, i, j);
        }
    }
    // row_i *= u, u a unit
    void row_scale(std::size_t i, Scalar u) {
        Scalar inv = R_.inverse(u);
        scale_row(A_, i, u);
        if (transforms_) {
            scale_row(U_, i, u);
            scale_col(Ui_, i, inv);
        }
    }

    Matrix& A() { return A_; }

    SmithForm finish(std::size_t rank) {
        SmithForm sf;
        sf.rows = A_.rows();
        sf.cols = A_.cols();
        sf.rank = rank;
        for (std::size_t t = 0; t < rank; ++t) sf.diagonal.push_back(A_(t, t));
        if (transforms_) {
            sf.U = std::move(U_);
            sf.U_inv = std::move(Ui_);
            sf.V = std::move(V_);
            sf.V_inv = std::move(Vi_);
        }
        return sf;
    }

private:
    void add_row(Matrix& m, std::size_t i, std::size_t j, Scalar c) {
        auto ri = m.row(i);
        auto rj = m.row(j);
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (rj[k]) ri[k] = R_.add(ri[k], R_.mul(c, rj[k]));
    }
    void add_col(Matrix& m, std::size_t i, std::size_t j, Scalar c) {
        for (std::size_t k = 0; k < m.rows(); ++k)
            if (m(k, j)) m(k, i) = R_.add(m(k, i), R_.mul(c, m(k, j)));
    }
    static void swap_rows(Matrix& m, std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
    }
    static void swap_cols(Matrix& m, std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
    }
    void scale_row(Matrix& m, std::size_t i, Scalar u) {
        for (auto& x : m.row(i)) x = R_.mul(u, x);
    }
    void scale_col(Matrix& m, std::size_t i, Scalar u) {
        for (std::size_t k = 0; k < m.rows(); ++k) m(k, i) = R_.mul(u, m(k, i));
    }

    const Ring& R_;
    Matrix A_;
    bool transforms_;
    Matrix U_, Ui_, V_, Vi_;
};

SmithForm smith_field(const Ring& R, const Matrix& a, bool transforms) {
    Reducer red(R, a, transforms);
    Matrix& A = red.A();
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        std::size_t pr = m, pc = n;
        for (std::size_t i = t; i < m && pr == m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (A(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == m) break;
        red.row_swap(t, pr);
        red.col_swap(t, pc);
        red.row_scale(t, R.inverse(A(t, t)));
        for (std::size_t i = t + 1; i < m; ++i)
            if (A(i, t)) red.row_add(i, t, R.neg(A(i, t)));
        for (std::size_t j = t + 1; j < n; ++j)
            if (A(t, j)) red.col_add(j, t, R.neg(A(t, j)));
    }
    return red.finish(t);
}

SmithForm smith_integers(const Ring& R, const Matrix& a, bool transforms) {
    Reducer red(R, a, transforms);
    Matrix& A = red.A();
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        bool found = false;
        for (;;) {
            std::size_t pr = m, pc = n;
            Scalar best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    Scalar v = A(i, j);
                    if (v == 0) continue;
                    Scalar av = abs_value(v);
                    if (pr == m || av < best) {
                        best = av;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == m) break;
            found = true;
            red.row_swap(t, pr);
            red.col_swap(t, pc);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (A(i, t)) {
                    red.row_add(i, t, R.neg(A(i, t) / A(t, t)));
                    if (A(i, t)) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (A(t, j)) {
                    red.col_add(j, t, R.neg(A(t, j) / A(t, t)));
                    if (A(t, j)) clean = false;
                }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        red.row_add(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!found) break;
        if (A(t, t) < 0) red.row_scale(t, -1);
    }
    return red.finish(t);
}

}  // namespace

SmithForm smith_normal_form(const Ring& R, const Matrix& a, bool with_transforms) {
    return R.is_field() ? smith_field(R, a, with_transforms)
                        : smith_integers(R, a, with_transforms);
}

std::vector<Scalar> invariant_factors(const Ring& R, const Matrix& a) {
    return smith_normal_form(R, a, false).diagonal;
}

std::size_t rank(const Ring& R, const Matrix& a) { return smith_normal_form(R, a, false).rank; }

std::optional<std::vector<Scalar>> solve(const Ring& R, const SmithForm& sf,
                                         std::span<const Scalar> b) {
    if (b.size() != sf.rows) throw InvalidInput("solve: right-hand side has wrong length");
    std::vector<Scalar> y = apply(R, sf.U, b);
    std::vector<Scalar> z(sf.cols, 0);
    for (std::size_t i = 0; i < sf.rows; ++i) {
        if (i < sf.rank) {
            Scalar d = sf.diagonal[i];
            if (R.is_field()) {
                z[i] = R.mul(y[i], R.inverse(d));
            } else {
                if (y[i] % d != 0) return std::nullopt;
                z[i] = y[i] / d;
            }
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return apply(R, sf.V, z);
}

Matrix kernel_basis(const SmithForm& sf) { return sf.V.col_range(sf.rank, sf.cols); }

Matrix cokernel_projection(const SmithForm& sf) {
    if (!sf.all_units()) throw PreconditionError("cokernel is not free");
    return sf.U.row_range(sf.rank, sf.rows);
}

Matrix cokernel_section(const SmithForm& sf) {
    if (!sf.all_units()) throw PreconditionError("cokernel is not free");
    return sf.U_inv.col_range(sf.rank, sf.rows);
}

Matrix hermite_normal_form(const Matrix& gens) {
    const Ring Z = Ring::integers();
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < gens.rows(); ++r) {
        auto row = gens.row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    const std::size_t n = gens.cols();
    auto axpy = [&](std::vector<Scalar>& dst, const std::vector<Scalar>& src, Scalar c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < n; ++k)
            if (src[k]) dst[k] = Z.add(dst[k], Z.mul(c, src[k]));
    };
    std::size_t k = 0;
    for (std::size_t c = 0; c < n && k < rows.size(); ++c) {
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t r = k; r < rows.size(); ++r)
                if (rows[r][c] != 0 &&
                    (piv == rows.size() || abs_value(rows[r][c]) < abs_value(rows[piv][c])))
                    piv = r;
            if (piv == rows.size()) break;
            std::swap(rows[k], rows[piv]);
            bool done = true;
            for (std::size_t r = k + 1; r < rows.size(); ++r)
                if (rows[r][c] != 0) {
                    axpy(rows[r], rows[k], -floor_div(rows[r][c], rows[k][c]));
                    if (rows[r][c] != 0) done = false;
                }
            if (done) break;
        }
        if (rows[k][c] == 0) continue;
        if (rows[k][c] < 0)
            for (auto& x : rows[k]) x = Z.neg(x);
        for (std::size_t r = 0; r < k; ++r) axpy(rows[r], rows[k], -floor_div(rows[r][c], rows[k][c]));
        ++k;
    }
    Matrix out(k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = rows[r][c];
    return out;
}

std::vector<Scalar> reduce_modulo_hnf(const Matrix& hnf, std::vector<Scalar> v) {
    const Ring Z = Ring::integers();
    if (v.size() != hnf.cols()) throw InvalidInput("reduce_modulo_hnf: length mismatch");
    for (std::size_t r = 0; r < hnf.rows(); ++r) {
        std::size_t c = 0;
        while (c < hnf.cols() && hnf(r, c) == 0) ++c;
        if (c == hnf.cols()) continue;
        Scalar q = floor_div(v[c], hnf(r, c));
        if (q == 0) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = Z.sub(v[k], Z.mul(q, hnf(r, k)));
    }
    return v;
}

}  // namespace toda
