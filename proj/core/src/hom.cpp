#include "toda/hom.hpp"

#include <string>

namespace toda {

// ---- HomSpace ----

HomSpace::HomSpace(ComplexPtr A, ComplexPtr B, int degree)
    : A_(std::move(A)), B_(std::move(B)), k_(degree) {
    if (!(A_->ring() == B_->ring())) throw InvalidInput("Hom: complexes over different rings");
    if (A_->is_zero()) return;
    for (int n = A_->min_degree(); n <= A_->max_degree(); ++n) {
        const std::size_t r = B_->dim(n + k_), c = A_->dim(n);
        if (r == 0 || c == 0) continue;
        blocks_.push_back({n, r, c, dim_});
        dim_ += r * c;
    }
}

const HomSpace::Block* HomSpace::block(int n) const {
    for (const auto& b : blocks_)
        if (b.n == n) return &b;
    return nullptr;
}

std::vector<Scalar> HomSpace::flatten(const GradedMap& h) const {
    if (h.degree() != k_ || !(*h.source() == *A_) || !(*h.target() == *B_))
        throw InvalidInput("flatten: map does not belong to this Hom space");
    std::vector<Scalar> x(dim_, 0);
    for (const auto& b : blocks_) {
        Matrix m = h.at(b.n);
        std::copy(m.data().begin(), m.data().end(), x.begin() + long(b.offset));
    }
    return x;
}

GradedMap HomSpace::unflatten(std::span<const Scalar> x) const {
    if (x.size() != dim_) throw InvalidInput("unflatten: wrong length");
    GradedMap h(A_, B_, k_);
    for (const auto& b : blocks_) {
        std::vector<Scalar> data(x.begin() + long(b.offset), x.begin() + long(b.offset + b.rows * b.cols));
        h.set(b.n, Matrix(b.rows, b.cols, std::move(data)));
    }
    return h;
}

Matrix HomSpace::boundary_matrix() const {
    const Ring& R = ring();
    HomSpace lower(A_, B_, k_ - 1);
    Matrix D(lower.dim(), dim_);
    const Scalar sign = (k_ % 2 == 0) ? R.reduce(-1) : 1;
    for (const auto& b : blocks_) {
        const Matrix dB = B_->d(b.n + k_);      // B_{n+k} -> B_{n+k-1}
        const Matrix dA = A_->d(b.n + 1);       // A_{n+1} -> A_n
        const Block* lo_same = lower.block(b.n);
        const Block* lo_next = lower.block(b.n + 1);
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) {
                const std::size_t col = b.offset + i * b.cols + j;
                if (lo_same)
                    for (std::size_t a = 0; a < lo_same->rows; ++a)
                        if (Scalar v = dB(a, i))
                            D(lo_same->offset + a * lo_same->cols + j, col) = R.add(
                                D(lo_same->offset + a * lo_same->cols + j, col), v);
                if (lo_next)
                    for (std::size_t c = 0; c < lo_next->cols; ++c)
                        if (Scalar v = dA(j, c))
                            D(lo_next->offset + i * lo_next->cols + c, col) = R.add(
                                D(lo_next->offset + i * lo_next->cols + c, col), R.mul(sign, v));
            }
    }
    return D;
}

Matrix HomSpace::postcompose_matrix(const GradedMap& w) const {
    if (!(*w.source() == *B_)) throw InvalidInput("postcompose: source of w differs from target");
    HomSpace out(A_, w.target(), k_ + w.degree());
    Matrix M(out.dim(), dim_);
    for (const auto& b : blocks_) {
        const Block* ob = out.block(b.n);
        if (!ob) continue;
        const Matrix wm = w.at(b.n + k_);
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j)
                for (std::size_t a = 0; a < ob->rows; ++a)
                    if (Scalar v = wm(a, i)) M(ob->offset + a * ob->cols + j, b.offset + i * b.cols + j) = v;
    }
    return M;
}

Matrix HomSpace::precompose_matrix(const GradedMap& v) const {
    if (!(*v.target() == *A_)) throw InvalidInput("precompose: target of v differs from source");
    HomSpace out(v.source(), B_, k_ + v.degree());
    Matrix M(out.dim(), dim_);
    for (const auto& b : blocks_) {
        const int np = b.n - v.degree();
        const Block* ob = out.block(np);
        if (!ob) continue;
        const Matrix vm = v.at(np);
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j)
                for (std::size_t c = 0; c < ob->cols; ++c)
                    if (Scalar x = vm(j, c)) M(ob->offset + i * ob->cols + c, b.offset + i * b.cols + j) = x;
    }
    return M;
}

// ---- solvers ----

BoundarySolver::BoundarySolver(ComplexPtr A, ComplexPtr B, int degree)
    : space_(A, B, degree), lower_(A, B, degree - 1),
      sf_(smith_normal_form(space_.ring(), space_.boundary_matrix())) {}

std::optional<GradedMap> BoundarySolver::solve(const GradedMap& t) const {
    auto x = toda::solve(space_.ring(), sf_, lower_.flatten(t));
    if (!x) return std::nullopt;
    return space_.unflatten(*x);
}

std::optional<GradedMap> solve_nullhomotopy(const ChainMap& f) {
    return BoundarySolver(f.source(), f.target(), 1).solve(f);
}

std::optional<ChainHomotopy> solve_homotopy(const ChainMap& f, const ChainMap& g) {
    auto h = solve_nullhomotopy(subtract(f, g));
    if (!h) return std::nullopt;
    return ChainHomotopy{f, g, std::move(*h)};
}

HomotopyInverse homotopy_inverse(const ChainMap& w) {
    const auto& X = w.source();
    const auto& Y = w.target();
    const Ring& R = w.ring();
    HomSpace U(Y, X, 0), Hs(Y, Y, 1), E(Y, Y, 0);
    const Matrix chain = U.boundary_matrix();    // u must be a chain map
    const Matrix post = U.postcompose_matrix(w); // u -> w u
    const Matrix dH = Hs.boundary_matrix();      // H -> dH + Hd
    const std::size_t a = U.dim(), b = Hs.dim();
    Matrix sys(chain.rows() + E.dim(), a + b);
    paste(sys, chain, 0, 0);
    paste(sys, post, chain.rows(), 0);
    paste(sys, negate(R, dH), chain.rows(), a);
    std::vector<Scalar> rhs(chain.rows(), 0);
    auto id = E.flatten(ChainMap::identity(Y));
    rhs.insert(rhs.end(), id.begin(), id.end());
    auto sol = solve(R, smith_normal_form(R, sys), rhs);
    if (!sol) throw PreconditionError("map is not a homotopy equivalence");
    std::span<const Scalar> s(*sol);
    return HomotopyInverse{ChainMap(U.unflatten(s.subspan(0, a))), Hs.unflatten(s.subspan(a, b))};
}

}  // namespace toda
