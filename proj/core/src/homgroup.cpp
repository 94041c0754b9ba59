#include <string>

#include "toda/hom.hpp"

namespace toda {

namespace {

Scalar mod_pos(Scalar x, Scalar m) {
    Scalar r = x % m;
    return r < 0 ? r + m : r;
}

Element normalize_with(const std::vector<Scalar>& orders, Element x) {
    if (x.size() != orders.size()) throw InvalidInput("group element has the wrong number of coordinates");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (orders[i] > 0) x[i] = mod_pos(x[i], orders[i]);
    return x;
}

}  // namespace

// ---- Subgroup / Coset ----

Subgroup::Subgroup(std::vector<Scalar> orders, const std::vector<Element>& generators)
    : orders_(std::move(orders)) {
    const std::size_t m = orders_.size();
    std::vector<Scalar> data;
    std::size_t rows = 0;
    for (const auto& g : generators) {
        auto v = normalize_with(orders_, g);
        data.insert(data.end(), v.begin(), v.end());
        ++rows;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (orders_[i] > 0) {
            for (std::size_t j = 0; j < m; ++j) data.push_back(i == j ? orders_[i] : 0);
            ++rows;
        }
    hnf_ = hermite_normal_form(Matrix(rows, m, std::move(data)));
}

Element Subgroup::canonical(const Element& x) const {
    if (x.size() != orders_.size()) throw InvalidInput("subgroup: element has the wrong number of coordinates");
    return normalize_with(orders_, reduce_modulo_hnf(hnf_, x));
}

bool Subgroup::contains(const Element& x) const {
    for (Scalar v : canonical(x))
        if (v != 0) return false;
    return true;
}

std::vector<Element> Subgroup::generators() const {
    std::vector<Element> out;
    for (std::size_t r = 0; r < hnf_.rows(); ++r) {
        auto row = hnf_.row(r);
        Element v = normalize_with(orders_, Element(row.begin(), row.end()));
        bool zero = true;
        for (Scalar x : v) zero = zero && x == 0;
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

Subgroup Subgroup::join(const Subgroup& other) const {
    if (other.orders_ != orders_) throw InvalidInput("subgroup join: different ambient groups");
    auto g = generators();
    auto h = other.generators();
    g.insert(g.end(), h.begin(), h.end());
    return Subgroup(orders_, g);
}

bool Coset::contains(const Element& x) const {
    Element diff(x.size());
    if (x.size() != representative.size()) throw InvalidInput("coset: element has the wrong number of coordinates");
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - representative[i];
    return subgroup.contains(diff);
}

bool operator==(const Coset& a, const Coset& b) {
    return a.subgroup == b.subgroup &&
           a.subgroup.canonical(a.representative) == b.subgroup.canonical(b.representative);
}

// ---- HomGroup ----

HomGroup::HomGroup(ComplexPtr A, ComplexPtr B, int degree) : space_(A, B, degree) {
    const Ring& R = space_.ring();
    boundary_ = space_.boundary_matrix();
    auto sf0 = smith_normal_form(R, boundary_);
    const std::size_t dim = space_.dim();
    const std::size_t m = dim - sf0.rank;
    Matrix K = sf0.V.col_range(sf0.rank, dim);
    Matrix Kc = sf0.V_inv.row_range(sf0.rank, dim);
    Matrix D1 = HomSpace(A, B, degree + 1).boundary_matrix();
    Matrix rel = multiply(R, Kc, D1);
    auto sf1 = smith_normal_form(R, rel);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m; ++i) {
        if (i < sf1.rank) {
            if (sf1.diagonal[i] != 1) {
                kept.push_back(i);
                orders_.push_back(sf1.diagonal[i]);
            }
        } else {
            kept.push_back(i);
            orders_.push_back(R.is_field() ? R.characteristic() : 0);
        }
    }
    cycle_basis_ = Matrix(dim, kept.size());
    coordinate_map_ = Matrix(kept.size(), dim);
    Matrix gens = multiply(R, K, sf1.U_inv);  // dim x m
    Matrix coords = multiply(R, sf1.U, Kc);   // m x dim
    for (std::size_t c = 0; c < kept.size(); ++c) {
        for (std::size_t r = 0; r < dim; ++r) cycle_basis_(r, c) = gens(r, kept[c]);
        for (std::size_t r = 0; r < dim; ++r) coordinate_map_(c, r) = coords(kept[c], r);
    }
}

bool HomGroup::is_finite() const noexcept {
    for (Scalar o : orders_)
        if (o == 0) return false;
    return true;
}

std::optional<std::uint64_t> HomGroup::order() const noexcept {
    std::uint64_t n = 1;
    for (Scalar o : orders_) {
        if (o == 0) return std::nullopt;
        if (n > (std::uint64_t(1) << 62) / std::uint64_t(o)) return std::nullopt;
        n *= std::uint64_t(o);
    }
    return n;
}

bool HomGroup::is_cycle(const GradedMap& f) const {
    auto x = space_.flatten(f);
    for (Scalar v : apply(ring(), boundary_, x))
        if (v != 0) return false;
    return true;
}

Element HomGroup::class_of(const GradedMap& f) const {
    auto x = space_.flatten(f);
    for (Scalar v : apply(ring(), boundary_, x))
        if (v != 0) throw PreconditionError("class_of: map is not a cycle of the Hom complex");
    return normalize(apply(ring(), coordinate_map_, x));
}

GradedMap HomGroup::representative(const Element& x) const {
    auto v = normalize(x);
    const Ring& R = ring();
    for (auto& c : v) c = R.reduce(c);
    return space_.unflatten(apply(R, cycle_basis_, v));
}

ChainMap HomGroup::representative_map(const Element& x) const {
    if (degree() != 0) throw InvalidInput("representative_map: group of degree != 0");
    return ChainMap(representative(x));
}

GradedMap HomGroup::generator(std::size_t i) const {
    Element e = zero();
    e.at(i) = 1;
    return representative(e);
}

Element HomGroup::normalize(Element x) const { return normalize_with(orders_, std::move(x)); }

Element HomGroup::add(const Element& a, const Element& b) const {
    const Ring Z = Ring::integers();
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Z.add(a[i], b.at(i));
    return normalize(std::move(out));
}

Element HomGroup::negate(const Element& a) const {
    const Ring Z = Ring::integers();
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Z.neg(a[i]);
    return normalize(std::move(out));
}

Element HomGroup::scale(Scalar s, const Element& a) const {
    const Ring Z = Ring::integers();
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Z.mul(s, a[i]);
    return normalize(std::move(out));
}

bool HomGroup::is_zero(const Element& x) const {
    for (Scalar v : normalize(x))
        if (v != 0) return false;
    return true;
}

std::vector<Element> HomGroup::elements(std::size_t cap) const {
    auto n = order();
    if (!n) throw PreconditionError("elements: group is infinite or too large");
    if (*n > cap) throw PreconditionError("elements: group has " + std::to_string(*n) +
                                          " elements, above the cap " + std::to_string(cap));
    std::vector<Element> out;
    Element e = zero();
    for (;;) {
        out.push_back(e);
        std::size_t i = e.size();
        while (i > 0 && e[i - 1] == orders_[i - 1] - 1) e[--i] = 0;
        if (i == 0) break;
        ++e[i - 1];
    }
    return out;
}

}  // namespace toda
