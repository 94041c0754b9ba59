#include <algorithm>
#include <functional>

#include "toda/chain.hpp"
#include "toda/smith.hpp"

namespace toda {

namespace {

struct Range {
    int lo = 0, hi = -1;
    bool empty() const { return hi < lo; }
};

Range range_of(const ChainComplex& A, int shift = 0) {
    if (A.is_zero()) return {};
    return {A.min_degree() + shift, A.max_degree() + shift};
}

Range hull(std::initializer_list<Range> rs) {
    Range out;
    for (const auto& r : rs) {
        if (r.empty()) continue;
        if (out.empty()) {
            out = r;
        } else {
            out.lo = std::min(out.lo, r.lo);
            out.hi = std::max(out.hi, r.hi);
        }
    }
    return out;
}

ComplexPtr build(const Ring& R, Range rg, const std::function<std::size_t(int)>& dim,
                 const std::function<Matrix(int)>& d) {
    if (rg.empty()) return zero_complex(R);
    std::vector<std::size_t> dims;
    std::vector<Matrix> ds;
    for (int n = rg.lo; n <= rg.hi; ++n) {
        dims.push_back(dim(n));
        ds.push_back(n == rg.lo ? Matrix(0, dims.back()) : d(n));
    }
    return make_complex(ChainComplex(R, rg.lo, std::move(dims), std::move(ds)));
}

GradedMap build_map(ComplexPtr src, ComplexPtr tgt, int degree,
                    const std::function<Matrix(int)>& comp) {
    GradedMap g(src, tgt, degree);
    if (!src->is_zero())
        for (int n = src->min_degree(); n <= src->max_degree(); ++n) g.set(n, comp(n));
    return g;
}

// Block matrix from a grid of optional blocks; row and column sizes are given.
Matrix blocks(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
              const std::vector<std::vector<Matrix>>& grid) {
    std::size_t R = 0, C = 0;
    for (auto r : rows) R += r;
    for (auto c : cols) C += c;
    Matrix out(R, C);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (i < grid.size() && j < grid[i].size() && !grid[i][j].empty())
                paste(out, grid[i][j], r0, c0);
            c0 += cols[j];
        }
        r0 += rows[i];
    }
    return out;
}

}  // namespace

DirectSum direct_sum(const std::vector<ComplexPtr>& parts) {
    if (parts.empty()) throw InvalidInput("direct_sum: no summands");
    const Ring& R = parts[0]->ring();
    Range rg;
    for (const auto& p : parts) rg = hull({rg, range_of(*p)});
    auto dims_at = [&](int n) {
        std::vector<std::size_t> v;
        for (const auto& p : parts) v.push_back(p->dim(n));
        return v;
    };
    auto S = build(
        R, rg,
        [&](int n) {
            std::size_t s = 0;
            for (const auto& p : parts) s += p->dim(n);
            return s;
        },
        [&](int n) {
            std::vector<Matrix> bl;
            for (const auto& p : parts) bl.push_back(p->d(n));
            return block_diagonal(bl);
        });
    DirectSum out{S, {}, {}};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto inc = build_map(parts[k], S, 0, [&](int n) {
            auto ds = dims_at(n);
            std::vector<std::vector<Matrix>> grid(ds.size());
            for (std::size_t i = 0; i < ds.size(); ++i) grid[i] = {i == k ? Matrix::identity(ds[i]) : Matrix()};
            return blocks(ds, {ds[k]}, grid);
        });
        auto proj = build_map(S, parts[k], 0, [&](int n) {
            auto ds = dims_at(n);
            std::vector<Matrix> row(ds.size());
            row[k] = Matrix::identity(ds[k]);
            return blocks({ds[k]}, ds, {row});
        });
        out.inclusions.emplace_back(std::move(inc));
        out.projections.emplace_back(std::move(proj));
    }
    return out;
}

ComplexPtr suspension(const ComplexPtr& A) {
    const Ring& R = A->ring();
    return build(
        R, range_of(*A, 1), [&](int n) { return A->dim(n - 1); },
        [&](int n) { return negate(R, A->d(n - 1)); });
}

ComplexPtr suspension(const ComplexPtr& A, int times) {
    if (times < 0) throw InvalidInput("suspension: negative count");
    ComplexPtr out = A;
    for (int i = 0; i < times; ++i) out = suspension(out);
    return out;
}

GradedMap suspension(const GradedMap& f, ComplexPtr source, ComplexPtr target) {
    return build_map(std::move(source), std::move(target), f.degree(),
                     [&](int n) { return f.at(n - 1); });
}

ChainMap suspension(const ChainMap& f) {
    return ChainMap(suspension(f, suspension(f.source()), suspension(f.target())));
}

ChainMap suspension(const ChainMap& f, int times) {
    ChainMap out = f;
    for (int i = 0; i < times; ++i) out = suspension(out);
    return out;
}

Cone cone(const ChainMap& f) {
    const auto& A = f.source();
    const auto& B = f.target();
    const Ring& R = f.ring();
    auto C = build(
        R, hull({range_of(*B), range_of(*A, 1)}), [&](int n) { return B->dim(n) + A->dim(n - 1); },
        [&](int n) {
            return blocks({B->dim(n - 1), A->dim(n - 2)}, {B->dim(n), A->dim(n - 1)},
                          {{B->d(n), f.at(n - 1)}, {Matrix(), negate(R, A->d(n - 1))}});
        });
    auto SA = suspension(A);
    ChainMap inc(build_map(B, C, 0, [&](int n) {
        return blocks({B->dim(n), A->dim(n - 1)}, {B->dim(n)}, {{Matrix::identity(B->dim(n))}});
    }));
    ChainMap proj(build_map(C, SA, 0, [&](int n) {
        return blocks({A->dim(n - 1)}, {B->dim(n), A->dim(n - 1)},
                      {{Matrix(), Matrix::identity(A->dim(n - 1))}});
    }));
    return Cone{C, std::move(inc), std::move(proj)};
}

ConeOn cone_on(const ComplexPtr& A) {
    auto c = cone(ChainMap::identity(A));
    return ConeOn{c.complex, c.inclusion};
}

Cylinder cylinder_factorization(const ChainMap& f) {
    const auto& A = f.source();
    const auto& B = f.target();
    const Ring& R = f.ring();
    auto sizes = [&](int n) { return std::vector<std::size_t>{A->dim(n), A->dim(n - 1), B->dim(n)}; };
    auto M = build(
        R, hull({range_of(*A), range_of(*A, 1), range_of(*B)}),
        [&](int n) { return A->dim(n) + A->dim(n - 1) + B->dim(n); },
        [&](int n) {
            return blocks(sizes(n - 1), sizes(n),
                          {{A->d(n), Matrix::identity(A->dim(n - 1)), Matrix()},
                           {Matrix(), negate(R, A->d(n - 1)), Matrix()},
                           {Matrix(), negate(R, f.at(n - 1)), B->d(n)}});
        });
    ChainMap j(build_map(A, M, 0, [&](int n) {
        return blocks(sizes(n), {A->dim(n)}, {{Matrix::identity(A->dim(n))}});
    }));
    ChainMap q(build_map(M, B, 0, [&](int n) {
        return blocks({B->dim(n)}, sizes(n), {{f.at(n), Matrix(), Matrix::identity(B->dim(n))}});
    }));
    return Cylinder{M, std::move(j), std::move(q)};
}

bool is_cofibration(const ChainMap& f) {
    const auto& A = *f.source();
    if (A.is_zero()) return true;
    for (int n = A.min_degree(); n <= A.max_degree(); ++n) {
        Matrix m = f.at(n);
        auto inv = invariant_factors(f.ring(), m);
        if (inv.size() != m.cols()) return false;
        for (Scalar x : inv)
            if (x != 1) return false;
    }
    return true;
}

}  // namespace toda
