#include "toda/random.hpp"

#include <algorithm>
#include <array>

#include "toda/hom.hpp"
#include "toda/smith.hpp"

namespace toda {

namespace {

Scalar pick(Rng& rng, Scalar lo, Scalar hi) {
    return std::uniform_int_distribution<Scalar>(lo, hi)(rng);
}

// Random unimodular matrix and its inverse from elementary operations.
std::pair<Matrix, Matrix> random_unimodular(const Ring& R, Rng& rng, std::size_t n) {
    Matrix P = Matrix::identity(n), Pi = Matrix::identity(n);
    if (n < 2) return {P, Pi};
    for (std::size_t t = 0; t < 2 * n; ++t) {
        std::size_t i = std::size_t(pick(rng, 0, Scalar(n) - 1));
        std::size_t j = std::size_t(pick(rng, 0, Scalar(n) - 2));
        if (j >= i) ++j;
        Scalar c = R.reduce(pick(rng, 0, 1) ? 1 : -1);
        // P <- E P with E = 1 + c e_ij; Pi <- Pi E^{-1}
        for (std::size_t k = 0; k < n; ++k) P(i, k) = R.add(P(i, k), R.mul(c, P(j, k)));
        for (std::size_t k = 0; k < n; ++k) Pi(k, j) = R.sub(Pi(k, j), R.mul(c, Pi(k, i)));
    }
    return {P, Pi};
}

Matrix small_combination(const Ring& R, Rng& rng, const Matrix& basis_rows) {
    Matrix out(1, basis_rows.cols());
    for (std::size_t r = 0; r < basis_rows.rows(); ++r) {
        Scalar c = R.is_field() ? pick(rng, 0, R.characteristic() - 1) : pick(rng, -1, 1);
        if (!c) continue;
        for (std::size_t k = 0; k < out.cols(); ++k)
            out(0, k) = R.add(out(0, k), R.mul(c, basis_rows(r, k)));
    }
    return out;
}

// Kernel of A as reduced rows.
Matrix kernel_rows(const Ring& R, const Matrix& A) {
    auto sf = smith_normal_form(R, A);
    return reduced_row_basis(R, kernel_basis(sf).transpose());
}

}  // namespace

Matrix reduced_row_basis(const Ring& R, const Matrix& rows) {
    if (!R.is_field()) return hermite_normal_form(rows);
    // reduced row echelon form
    Matrix m = reduce(R, rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(p, k));
        Scalar inv = R.inverse(m(r, c));
        for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = R.mul(inv, m(r, k));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c)) {
                Scalar f = m(i, c);
                for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = R.sub(m(i, k), R.mul(f, m(r, k)));
            }
        ++r;
    }
    return m.row_range(0, r);
}

ComplexPtr random_complex(const Ring& R, Rng& rng, const RandomShape& shape) {
    if (shape.span <= 0) return zero_complex(R);
    const std::size_t S = std::size_t(shape.span);
    std::vector<std::size_t> dims(S);
    for (auto& d : dims) d = std::size_t(pick(rng, 0, Scalar(shape.max_rank)));
    std::vector<Matrix> ds;
    std::vector<std::size_t> used_low(S, 0);  // basis vectors of degree i already hit by d
    ds.emplace_back(0, dims[0]);
    for (std::size_t i = 1; i < S; ++i) {
        Matrix d(dims[i - 1], dims[i]);
        if (!shape.zero_differential) {
            // vectors of degree i-1 not already sources of a two-term piece
            std::size_t avail_low = dims[i - 1] - used_low[i - 1];
            std::size_t k = std::size_t(pick(rng, 0, Scalar(std::min(avail_low, dims[i]))));
            for (std::size_t t = 0; t < k; ++t) {
                Scalar m = R.is_field() ? 1 + pick(rng, 0, R.characteristic() - 2)
                                        : std::array<Scalar, 4>{1, 1, 2, 3}[std::size_t(pick(rng, 0, 3))];
                // target: top of degree i-1 (after its own used sources), source: bottom of degree i
                d(dims[i - 1] - 1 - t, t) = R.reduce(m);
            }
            used_low[i] = k;
        }
        ds.push_back(std::move(d));
    }
    // conjugate
    std::vector<std::pair<Matrix, Matrix>> P;
    for (std::size_t i = 0; i < S; ++i) P.push_back(random_unimodular(R, rng, dims[i]));
    for (std::size_t i = 1; i < S; ++i) ds[i] = multiply(R, P[i - 1].first, multiply(R, ds[i], P[i].second));
    return make_complex(ChainComplex(R, shape.min_degree, dims, ds));
}

ChainMap random_chain_map(const ComplexPtr& A, const ComplexPtr& B, Rng& rng) {
    const Ring& R = A->ring();
    HomSpace H(A, B, 0);
    Matrix K = kernel_rows(R, H.boundary_matrix());
    Matrix x = small_combination(R, rng, K);
    return ChainMap(H.unflatten(x.data()));
}

ChainMap random_map_killing(const ChainMap& g, const ComplexPtr& B, Rng& rng) {
    const Ring& R = g.ring();
    HomSpace F(g.target(), B, 0), Hs(g.source(), B, 1);
    const Matrix chain = F.boundary_matrix();
    const Matrix pre = F.precompose_matrix(g);
    const Matrix dH = Hs.boundary_matrix();
    Matrix sys(chain.rows() + pre.rows(), F.dim() + Hs.dim());
    paste(sys, chain, 0, 0);
    paste(sys, pre, chain.rows(), 0);
    paste(sys, negate(R, dH), chain.rows(), F.dim());
    Matrix K = kernel_rows(R, sys);
    Matrix x = small_combination(R, rng, K);
    std::vector<Scalar> f(x.data().begin(), x.data().begin() + long(F.dim()));
    return ChainMap(F.unflatten(f));
}

std::vector<ChainMap> random_toda_diagram(const Ring& R, Rng& rng, std::size_t length,
                                          const RandomShape& shape) {
    if (length == 0) throw InvalidInput("random_toda_diagram: length must be >= 1");
    std::vector<ComplexPtr> A;
    for (std::size_t i = 0; i <= length; ++i) A.push_back(random_complex(R, rng, shape));
    std::vector<ChainMap> maps;
    maps.push_back(random_chain_map(A[0], A[1], rng));
    for (std::size_t i = 1; i < length; ++i) maps.push_back(random_map_killing(maps.back(), A[i + 1], rng));
    return maps;
}

}  // namespace toda
