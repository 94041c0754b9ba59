#pragma once

// Hand-built diagrams shared by the bracket, filtered and acceptance tests.

#include <vector>

#include "toda/chain.hpp"
#include "toda/filtered.hpp"

namespace toda::testing {

/// Z --p--> Z in degrees 1, 0.
inline ComplexPtr moore(const Ring& R, Scalar p) {
    return make_complex(ChainComplex(R, 0, {1, 1}, {Matrix(0, 1), Matrix{{p}}}));
}

/// p * identity on the Moore complex.
inline ChainMap moore_multiplication(const ComplexPtr& M, Scalar p) {
    return scale(p, ChainMap::identity(M));
}

/// Z[0] -p-> Z[0] -> Moore(p) -> Z[1]; the triple bracket is the coset
/// 1 + pZ, which misses zero.
inline std::vector<ChainMap> obstruction_instance(Scalar p) {
    const Ring Z = Ring::integers();
    auto A0 = make_complex(ChainComplex::concentrated(Z, 0, 1));
    auto A2 = moore(Z, p);
    auto A3 = make_complex(ChainComplex::concentrated(Z, 1, 1));
    return {ChainMap(A0, A0, {{0, Matrix{{p}}}}), ChainMap(A0, A2, {{0, Matrix{{1}}}}),
            ChainMap(A2, A3, {{1, Matrix{{1}}}})};
}

/// Degreewise f + g on the direct sums of sources and targets.
inline ChainMap sum_map(const ChainMap& f, const ChainMap& g) {
    auto s = direct_sum({f.source(), g.source()});
    auto t = direct_sum({f.target(), g.target()});
    return add(compose(compose(t.inclusions[0], f), s.projections[0]),
               compose(compose(t.inclusions[1], g), s.projections[1]));
}

/// Objectwise direct sum of two diagrams of equal length.
inline std::vector<ChainMap> sum_diagram(const std::vector<ChainMap>& a, const std::vector<ChainMap>& b) {
    std::vector<ChainMap> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(sum_map(a[k], b[k]));
    return out;
}

// Complexes concentrated in one degree with zero differential.
inline ComplexPtr wedge(const Ring& R, int degree, std::size_t rank) {
    return make_complex(ChainComplex::concentrated(R, degree, rank));
}

// X_0 = R^a[0], X_1 adds R^b[1] attached by d1, X_2 adds R^c[2] attached by d2
// with d1 d2 = 0; all quotients have zero differential.
inline FilteredObject cellular(const Ring& R, const Matrix& d1_, const Matrix& d2_) {
    const Matrix d1 = reduce(R, d1_), d2 = reduce(R, d2_);
    const std::size_t a = d1.rows(), b = d1.cols(), c = d2.cols();
    auto X0 = wedge(R, 0, a);
    auto X1 = make_complex(ChainComplex(R, 0, {a, b}, {Matrix(0, a), d1}));
    auto X2 = make_complex(ChainComplex(R, 0, {a, b, c}, {Matrix(0, a), d1, d2}));
    ChainMap j0(X0, X1, {{0, Matrix::identity(a)}});
    ChainMap j1(X1, X2, {{0, Matrix::identity(a)}, {1, Matrix::identity(b)}});
    return make_filtered_object(X0, {j0, j1});
}

}  // namespace toda::testing
