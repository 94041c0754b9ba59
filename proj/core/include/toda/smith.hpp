#pragma once

#include <optional>
#include <vector>

#include "toda/matrix.hpp"

namespace toda {

/// Smith normal form U * A * V = D with U, V invertible over the ring.
///
/// Pivoting is deterministic: over Z the nonzero entry of smallest absolute
/// value wins, ties broken by lowest row then lowest column; over F_p the first
/// nonzero entry in row-major order wins and is scaled to 1. The nonzero
/// diagonal entries d_0 | d_1 | ... are positive.
struct SmithForm {
    Matrix U, U_inv, V, V_inv;
    std::vector<Scalar> diagonal;  // length rank
    std::size_t rank = 0;
    std::size_t rows = 0, cols = 0;

    bool all_units() const noexcept {
        for (Scalar d : diagonal)
            if (d != 1) return false;
        return true;
    }
};

SmithForm smith_normal_form(const Ring& R, const Matrix& a, bool with_transforms = true);

/// Invariant factors only (no transforms).
std::vector<Scalar> invariant_factors(const Ring& R, const Matrix& a);
std::size_t rank(const Ring& R, const Matrix& a);

/// Solves A x = b. Returns nullopt when no solution exists over the ring.
/// The returned solution has zero coordinates along the kernel directions of
/// the Smith basis, which makes it deterministic.
std::optional<std::vector<Scalar>> solve(const Ring& R, const SmithForm& sf,
                                         std::span<const Scalar> b);

/// Columns form a basis of ker A (saturated over Z).
Matrix kernel_basis(const SmithForm& sf);

/// Rows form a surjection Y -> Y / im A whose kernel is exactly im A.
/// Requires all invariant factors to be units.
Matrix cokernel_projection(const SmithForm& sf);

/// Columns form a section of cokernel_projection.
Matrix cokernel_section(const SmithForm& sf);

/// Row-style Hermite normal form over Z of the lattice spanned by the rows of
/// `gens`. Zero rows are dropped; the result is unique for the lattice.
Matrix hermite_normal_form(const Matrix& gens);

/// Reduces `v` modulo the lattice with Hermite basis `hnf` to its canonical
/// representative.
std::vector<Scalar> reduce_modulo_hnf(const Matrix& hnf, std::vector<Scalar> v);

}  // namespace toda
