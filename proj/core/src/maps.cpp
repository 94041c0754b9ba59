#include <string>

#include "toda/chain.hpp"

namespace toda {

GradedMap::GradedMap(ComplexPtr source, ComplexPtr target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), deg_(degree) {
    if (!src_ || !tgt_) throw InvalidInput("map endpoints must be non-null");
    if (!(src_->ring() == tgt_->ring())) throw InvalidInput("map endpoints over different rings");
    if (!src_->is_zero())
        for (int n = src_->min_degree(); n <= src_->max_degree(); ++n)
            comps_.emplace_back(tgt_->dim(n + deg_), src_->dim(n));
}

GradedMap::GradedMap(ComplexPtr source, ComplexPtr target, int degree,
                     const std::map<int, Matrix>& comps)
    : GradedMap(std::move(source), std::move(target), degree) {
    for (const auto& [n, m] : comps) set(n, m);
}

Matrix GradedMap::at(int n) const {
    if (src_->is_zero() || n < src_->min_degree() || n > src_->max_degree())
        return Matrix(tgt_->dim(n + deg_), src_->dim(n));
    return comps_[std::size_t(n - src_->min_degree())];
}

void GradedMap::set(int n, Matrix m) {
    const std::size_t r = tgt_->dim(n + deg_), c = src_->dim(n);
    if (m.rows() != r || m.cols() != c)
        throw InvalidInput("map component at degree " + std::to_string(n) + " has shape " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", expected " + std::to_string(r) + "x" + std::to_string(c));
    if (r == 0 || c == 0) return;
    const Ring& R = ring();
    if (R.is_field())
        for (Scalar x : m.data())
            if (x < 0 || x >= R.characteristic())
                throw InvalidInput("map component at degree " + std::to_string(n) +
                                   " has an entry outside [0,p)");
    comps_[std::size_t(n - src_->min_degree())] = std::move(m);
}

bool GradedMap::is_zero() const noexcept {
    for (const auto& m : comps_)
        if (!m.is_zero()) return false;
    return true;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.deg_ == b.deg_ && *a.src_ == *b.src_ && *a.tgt_ == *b.tgt_ && a.comps_ == b.comps_;
}

namespace {

void check_chain(const GradedMap& g) {
    if (g.degree() != 0) throw InvalidInput("chain map must have degree 0");
    const auto& A = *g.source();
    const auto& B = *g.target();
    if (A.is_zero()) return;
    const Ring& R = g.ring();
    for (int n = A.min_degree(); n <= A.max_degree() + 1; ++n) {
        Matrix lhs = multiply(R, g.at(n - 1), A.d(n));
        Matrix rhs = multiply(R, B.d(n), g.at(n));
        if (!(lhs == rhs))
            throw InvalidInput("map does not commute with the differential at degree " +
                               std::to_string(n));
    }
}

void check_same_shape(const GradedMap& a, const GradedMap& b) {
    if (a.degree() != b.degree() || !(*a.source() == *b.source()) ||
        !(*a.target() == *b.target()))
        throw InvalidInput("maps have different source, target or degree");
}

template <class Op>
GradedMap zip(const GradedMap& a, const GradedMap& b, Op op) {
    check_same_shape(a, b);
    GradedMap out(a.source(), a.target(), a.degree());
    const auto& A = *a.source();
    if (A.is_zero()) return out;
    for (int n = A.min_degree(); n <= A.max_degree(); ++n) out.set(n, op(a.at(n), b.at(n)));
    return out;
}

const GradedMap& G(const ChainMap& f) { return f; }

}  // namespace

ChainMap::ChainMap(GradedMap g) : GradedMap(std::move(g)) { check_chain(*this); }

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, const std::map<int, Matrix>& comps)
    : ChainMap(GradedMap(std::move(source), std::move(target), 0, comps)) {}

ChainMap ChainMap::identity(ComplexPtr A) {
    GradedMap g(A, A, 0);
    if (!A->is_zero())
        for (int n = A->min_degree(); n <= A->max_degree(); ++n)
            g.set(n, Matrix::identity(A->dim(n)));
    return ChainMap(std::move(g));
}

ChainMap ChainMap::zero(ComplexPtr source, ComplexPtr target) {
    return ChainMap(GradedMap(std::move(source), std::move(target), 0));
}

bool is_homotopy(const ChainMap& from, const ChainMap& to, const GradedMap& h) {
    check_same_shape(from, to);
    if (h.degree() != 1 || !(*h.source() == *from.source()) || !(*h.target() == *from.target()))
        return false;
    return subtract(G(from), G(to)) == hom_boundary(h);
}

ChainHomotopy make_homotopy(ChainMap from, ChainMap to, GradedMap h) {
    if (!is_homotopy(from, to, h))
        throw PreconditionError("homotopy identity from - to = dH + Hd fails");
    return ChainHomotopy{std::move(from), std::move(to), std::move(h)};
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (!(*g.source() == *f.target())) throw InvalidInput("compose: source of g != target of f");
    GradedMap out(f.source(), g.target(), f.degree() + g.degree());
    const auto& A = *f.source();
    if (A.is_zero()) return out;
    const Ring& R = f.ring();
    for (int n = A.min_degree(); n <= A.max_degree(); ++n)
        out.set(n, multiply(R, g.at(n + f.degree()), f.at(n)));
    return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) { return ChainMap(compose(G(g), G(f))); }

GradedMap add(const GradedMap& a, const GradedMap& b) {
    const Ring& R = a.ring();
    return zip(a, b, [&](const Matrix& x, const Matrix& y) { return toda::add(R, x, y); });
}
ChainMap add(const ChainMap& a, const ChainMap& b) { return ChainMap(add(G(a), G(b))); }

GradedMap subtract(const GradedMap& a, const GradedMap& b) {
    const Ring& R = a.ring();
    return zip(a, b, [&](const Matrix& x, const Matrix& y) { return toda::subtract(R, x, y); });
}
ChainMap subtract(const ChainMap& a, const ChainMap& b) { return ChainMap(subtract(G(a), G(b))); }

GradedMap scale(Scalar s, const GradedMap& a) {
    const Ring& R = a.ring();
    GradedMap out(a.source(), a.target(), a.degree());
    const auto& A = *a.source();
    if (A.is_zero()) return out;
    for (int n = A.min_degree(); n <= A.max_degree(); ++n)
        out.set(n, toda::scale(R, R.reduce(s), a.at(n)));
    return out;
}
ChainMap scale(Scalar s, const ChainMap& a) { return ChainMap(scale(s, G(a))); }

GradedMap hom_boundary(const GradedMap& h) {
    const int k = h.degree();
    const auto& A = *h.source();
    const auto& B = *h.target();
    const Ring& R = h.ring();
    GradedMap out(h.source(), h.target(), k - 1);
    if (A.is_zero()) return out;
    for (int n = A.min_degree(); n <= A.max_degree(); ++n) {
        Matrix a = multiply(R, B.d(n + k), h.at(n));
        Matrix b = multiply(R, h.at(n - 1), A.d(n));
        out.set(n, k % 2 == 0 ? toda::subtract(R, a, b) : toda::add(R, a, b));
    }
    return out;
}

GradedMap retarget(const GradedMap& f, ComplexPtr source, ComplexPtr target) {
    if (!(*source == *f.source()) || !(*target == *f.target()))
        throw InvalidInput("retarget: endpoints differ in content");
    GradedMap out(std::move(source), std::move(target), f.degree());
    const auto& A = *f.source();
    if (!A.is_zero())
        for (int n = A.min_degree(); n <= A.max_degree(); ++n) out.set(n, f.at(n));
    return out;
}

ChainMap retarget(const ChainMap& f, ComplexPtr source, ComplexPtr target) {
    return ChainMap(retarget(G(f), std::move(source), std::move(target)));
}

}  // namespace toda
