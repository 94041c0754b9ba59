#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "toda/matrix.hpp"

namespace toda {

/// Bounded chain complex of finitely generated free modules. Degree n has
/// rank dim(n); d(n) maps degree n to degree n-1. Leading and trailing zero
/// degrees are trimmed, so structurally equal complexes compare equal.
class ChainComplex {
public:
    /// `dims[i]` is the rank in degree min_degree+i and `d[i]` has shape
    /// dims[i-1] x dims[i] (0 rows for i = 0). Throws InvalidInput on shape
    /// errors or d*d != 0, naming the degree.
    ChainComplex(Ring ring, int min_degree, std::vector<std::size_t> dims, std::vector<Matrix> d);
    /// The zero complex (the point object).
    explicit ChainComplex(Ring ring) : ring_(ring) {}

    /// Rank `rank` in a single degree, zero differential.
    static ChainComplex concentrated(Ring ring, int degree, std::size_t rank);

    const Ring& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return dims_.empty(); }
    /// Lowest and highest degree carrying a nonzero module. Meaningless for
    /// the zero complex (0 and -1).
    int min_degree() const noexcept { return lo_; }
    int max_degree() const noexcept { return lo_ + int(dims_.size()) - 1; }
    std::size_t dim(int n) const noexcept;
    /// Differential out of degree n, shape dim(n-1) x dim(n).
    Matrix d(int n) const;
    std::size_t total_rank() const noexcept;
    int span() const noexcept { return int(dims_.size()); }

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

private:
    Ring ring_;
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

ComplexPtr make_complex(ChainComplex c);
ComplexPtr zero_complex(const Ring& R);

/// Degree-k collection of module maps h_n: A_n -> B_{n+k}. No compatibility
/// with differentials is required.
class GradedMap {
public:
    GradedMap(ComplexPtr source, ComplexPtr target, int degree);
    /// Components keyed by source degree; missing degrees are zero.
    GradedMap(ComplexPtr source, ComplexPtr target, int degree, const std::map<int, Matrix>& comps);

    const ComplexPtr& source() const noexcept { return src_; }
    const ComplexPtr& target() const noexcept { return tgt_; }
    const Ring& ring() const noexcept { return src_->ring(); }
    int degree() const noexcept { return deg_; }

    /// Component at source degree n, shape target.dim(n+k) x source.dim(n).
    Matrix at(int n) const;
    void set(int n, Matrix m);
    bool is_zero() const noexcept;

    friend bool operator==(const GradedMap& a, const GradedMap& b);

private:
    ComplexPtr src_, tgt_;
    int deg_;
    std::vector<Matrix> comps_;  // indexed by n - source.min_degree()
};

/// Degree-0 map commuting strictly with the differentials.
class ChainMap : public GradedMap {
public:
    /// Throws InvalidInput unless `g` has degree 0 and commutes with d.
    explicit ChainMap(GradedMap g);
    ChainMap(ComplexPtr source, ComplexPtr target, const std::map<int, Matrix>& comps);

    static ChainMap identity(ComplexPtr A);
    static ChainMap zero(ComplexPtr source, ComplexPtr target);
};

/// H with from - to = dH + Hd.
struct ChainHomotopy {
    ChainMap from, to;
    GradedMap h;
};

/// Throws PreconditionError when the identity fails.
ChainHomotopy make_homotopy(ChainMap from, ChainMap to, GradedMap h);
bool is_homotopy(const ChainMap& from, const ChainMap& to, const GradedMap& h);

// Arithmetic on graded maps of equal shape. Results of chain maps are chain maps.
GradedMap compose(const GradedMap& g, const GradedMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);
GradedMap add(const GradedMap& a, const GradedMap& b);
ChainMap add(const ChainMap& a, const ChainMap& b);
GradedMap subtract(const GradedMap& a, const GradedMap& b);
ChainMap subtract(const ChainMap& a, const ChainMap& b);
GradedMap scale(Scalar s, const GradedMap& a);
ChainMap scale(Scalar s, const ChainMap& a);
/// Hom-complex boundary d h - (-1)^k h d of a degree-k map (degree k-1).
GradedMap hom_boundary(const GradedMap& h);
/// Same maps, new (equal-content) endpoints; used after rebuilding complexes.
GradedMap retarget(const GradedMap& f, ComplexPtr source, ComplexPtr target);
ChainMap retarget(const ChainMap& f, ComplexPtr source, ComplexPtr target);

// ---- constructions ----

struct DirectSum {
    ComplexPtr sum;
    std::vector<ChainMap> inclusions, projections;
};
/// Degreewise block sum with zero off-diagonal differential blocks.
DirectSum direct_sum(const std::vector<ComplexPtr>& parts);

struct Cone {
    ComplexPtr complex;
    ChainMap inclusion;   // B -> C_f
    ChainMap projection;  // C_f -> suspension(A)
};
/// C_f in degree n is B_n + A_{n-1} with d(b, a) = (d b + f a, -d a).
Cone cone(const ChainMap& f);

struct ConeOn {
    ComplexPtr complex;
    ChainMap inclusion;
};
ConeOn cone_on(const ComplexPtr& A);

/// Degree n carries A_{n-1}; the differential is -d.
ComplexPtr suspension(const ComplexPtr& A);
ComplexPtr suspension(const ComplexPtr& A, int times);
/// (Sf)_n = f_{n-1} for a map of any degree. For a homotopy H, the homotopy
/// between suspended maps is -(SH).
GradedMap suspension(const GradedMap& f, ComplexPtr source, ComplexPtr target);
ChainMap suspension(const ChainMap& f);
ChainMap suspension(const ChainMap& f, int times);

struct Cylinder {
    ComplexPtr complex;
    ChainMap inclusion;   // j: A -> M, a cofibration
    ChainMap retraction;  // q: M -> B, a quasi-isomorphism with q j = f
};
/// M_n = A_n + A_{n-1} + B_n, d(a, a', b) = (d a + a', -d a', d b - f a').
Cylinder cylinder_factorization(const ChainMap& f);

/// Degreewise split mono with free cokernel.
bool is_cofibration(const ChainMap& f);

/// Quotient Y / im(g) for a chain map g: S -> Y whose image is a degreewise
/// direct summand. `section` is a degree-0 module section of `projection`.
struct Quotient {
    ComplexPtr complex;
    ChainMap projection;
    GradedMap section;
};
/// Throws PreconditionError if the image is not a direct summand.
Quotient quotient(const ChainMap& g);
/// Quotient of Y by the sum of the images of several maps into Y.
Quotient quotient(const ComplexPtr& Y, const std::vector<ChainMap>& gs);

/// Split short exact sequence X -> Y -> Q from a cofibration j, with
/// retraction r and section s such that j r + s p = 1, r s = 0.
struct SplitCofiber {
    ChainMap inclusion;
    ComplexPtr quotient;
    ChainMap projection;
    GradedMap section;
    GradedMap retraction;

    /// delta = r d s : Q -> suspension(X), a chain map.
    ChainMap connecting() const;
};
SplitCofiber split_cofiber(const ChainMap& j);

/// Map Q -> Q' of quotients induced by g: Y -> Y' where g carries the
/// subobject of `a` into that of `b`; computed as p' g s.
ChainMap induced_on_quotients(const Quotient& a, const Quotient& b, const ChainMap& g);

struct Pushout {
    ComplexPtr complex;
    ChainMap from_z;  // j: Z -> P, a cofibration
    ChainMap from_y;  // i: Y -> P
};
/// Pushout of a cofibration f: X -> Y along k: X -> Z.
Pushout pushout(const ChainMap& f, const ChainMap& k);

struct HomologyGroup {
    int degree = 0;
    std::size_t free_rank = 0;
    std::vector<Scalar> torsion;  // invariant factors > 1, Z only
    bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};
/// One entry per degree min..max of A (empty for the zero complex).
std::vector<HomologyGroup> homology(const ChainComplex& A);
/// Nonzero homology groups only, keyed by degree.
std::map<int, HomologyGroup> homology_signature(const ChainComplex& A);
bool is_acyclic(const ChainComplex& A);
bool is_quasi_iso(const ChainMap& f);

}  // namespace toda
