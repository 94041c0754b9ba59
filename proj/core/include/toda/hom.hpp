#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toda/chain.hpp"
#include "toda/smith.hpp"

namespace toda {

/// Degree-k part of the Hom complex, flattened to coordinates: for every
/// source degree n (ascending) the entries of h_n: A_n -> B_{n+k}, row-major.
class HomSpace {
public:
    HomSpace(ComplexPtr A, ComplexPtr B, int degree);

    const ComplexPtr& source() const noexcept { return A_; }
    const ComplexPtr& target() const noexcept { return B_; }
    const Ring& ring() const noexcept { return A_->ring(); }
    int degree() const noexcept { return k_; }
    std::size_t dim() const noexcept { return dim_; }

    std::vector<Scalar> flatten(const GradedMap& h) const;
    GradedMap unflatten(std::span<const Scalar> x) const;

    /// Matrix of D h = d h - (-1)^k h d into HomSpace(A, B, k-1).
    Matrix boundary_matrix() const;
    /// Matrix of h |-> w h into HomSpace(A, target(w), k).
    Matrix postcompose_matrix(const GradedMap& w) const;
    /// Matrix of h |-> h v into HomSpace(source(v), B, k).
    Matrix precompose_matrix(const GradedMap& v) const;

private:
    struct Block {
        int n;
        std::size_t rows, cols, offset;
    };
    ComplexPtr A_, B_;
    int k_;
    std::vector<Block> blocks_;
    std::size_t dim_ = 0;

    const Block* block(int n) const;
};

/// Solves D H = target in the Hom complex, caching the Smith form.
class BoundarySolver {
public:
    /// Solutions H live in HomSpace(A, B, degree).
    BoundarySolver(ComplexPtr A, ComplexPtr B, int degree);
    const HomSpace& space() const noexcept { return space_; }
    /// H with D H = t, where t has degree `degree - 1`; nullopt if none.
    std::optional<GradedMap> solve(const GradedMap& t) const;

private:
    HomSpace space_, lower_;
    SmithForm sf_;
};

/// Returns H with f - g = dH + Hd, or nullopt when f and g are not homotopic.
std::optional<ChainHomotopy> solve_homotopy(const ChainMap& f, const ChainMap& g);
/// Returns H with f = dH + Hd.
std::optional<GradedMap> solve_nullhomotopy(const ChainMap& f);

struct HomotopyInverse {
    ChainMap inverse;  // u: Y -> X
    GradedMap homotopy;  // w u - 1 = dH + Hd on Y
};
/// Homotopy inverse of a quasi-isomorphism w: X -> Y between bounded free complexes.
HomotopyInverse homotopy_inverse(const ChainMap& w);

/// Finitely generated abelian group presented as a product of cyclic groups.
/// orders[i] is the order of coordinate i, 0 for infinite cyclic.
using Element = std::vector<Scalar>;

/// Subgroup of prod Z/orders[i], stored as the Hermite basis of its preimage
/// lattice in Z^m.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(std::vector<Scalar> orders, const std::vector<Element>& generators);

    const std::vector<Scalar>& orders() const noexcept { return orders_; }
    bool contains(const Element& x) const;
    /// Canonical representative of x modulo the subgroup.
    Element canonical(const Element& x) const;
    /// Nonzero group elements among the Hermite basis rows.
    std::vector<Element> generators() const;
    bool is_trivial() const { return generators().empty(); }
    Subgroup join(const Subgroup& other) const;
    const Matrix& hermite_basis() const noexcept { return hnf_; }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.orders_ == b.orders_ && a.hnf_ == b.hnf_;
    }

private:
    std::vector<Scalar> orders_;
    Matrix hnf_;
};

/// x + S.
struct Coset {
    Element representative;
    Subgroup subgroup;
    bool contains(const Element& x) const;
    bool contains_zero() const { return contains(Element(representative.size(), 0)); }
    friend bool operator==(const Coset& a, const Coset& b);
};

/// [A, B]_k: degree-k cycles of Hom(A, B) modulo boundaries. For k = 0 these are
/// homotopy classes of chain maps; for k = 1 classes of self-homotopies, which
/// coincide with homotopy classes of maps from suspension(A) to B.
class HomGroup {
public:
    HomGroup(ComplexPtr A, ComplexPtr B, int degree = 0);

    const ComplexPtr& source() const noexcept { return space_.source(); }
    const ComplexPtr& target() const noexcept { return space_.target(); }
    const Ring& ring() const noexcept { return space_.ring(); }
    int degree() const noexcept { return space_.degree(); }
    const HomSpace& space() const noexcept { return space_; }

    std::size_t rank() const noexcept { return orders_.size(); }
    const std::vector<Scalar>& orders() const noexcept { return orders_; }
    bool is_finite() const noexcept;
    /// Group order, nullopt when infinite or above 2^62.
    std::optional<std::uint64_t> order() const noexcept;

    /// Coordinates of the class of a cycle. Throws PreconditionError otherwise.
    Element class_of(const GradedMap& f) const;
    bool is_cycle(const GradedMap& f) const;
    GradedMap representative(const Element& x) const;
    ChainMap representative_map(const Element& x) const;
    GradedMap generator(std::size_t i) const;

    Element zero() const { return Element(orders_.size(), 0); }
    Element normalize(Element x) const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element scale(Scalar s, const Element& a) const;
    bool is_zero(const Element& x) const;

    Subgroup subgroup_generated_by(const std::vector<Element>& gens) const {
        return Subgroup(orders_, gens);
    }
    Subgroup trivial_subgroup() const { return Subgroup(orders_, {}); }
    /// Every element in lexicographic coordinate order. Throws when the group
    /// is infinite or has more than `cap` elements.
    std::vector<Element> elements(std::size_t cap = 1u << 16) const;

private:
    HomSpace space_;
    std::vector<Scalar> orders_;
    Matrix cycle_basis_;    // columns: generators of the kept coordinates in flat form
    Matrix coordinate_map_; // flat cycle -> kept coordinates (before reduction)
    Matrix boundary_;       // D into the next lower degree, for the cycle test
};

}  // namespace toda
