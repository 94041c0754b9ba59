#pragma once

#include <optional>
#include <random>
#include <vector>

#include "toda/chain.hpp"

namespace toda {

/// Shape bounds for generated complexes.
struct RandomShape {
    int min_degree = 0;
    int span = 2;              // number of degrees
    std::size_t max_rank = 2;  // per degree
    bool zero_differential = false;
};

using Rng = std::mt19937_64;

/// A complex in a standard form (free summands and two-term pieces, with
/// multipliers 1, 2 or 3 over Z) conjugated by random unimodular changes of
/// basis.
ComplexPtr random_complex(const Ring& R, Rng& rng, const RandomShape& shape);

/// Small random combination of a reduced basis of the chain maps A -> B.
ChainMap random_chain_map(const ComplexPtr& A, const ComplexPtr& B, Rng& rng);

/// Small random combination of a reduced basis of the space of chain maps
/// f: target(g) -> B with f g nullhomotopic.
ChainMap random_map_killing(const ChainMap& g, const ComplexPtr& B, Rng& rng);

/// Random Toda diagram A_0 -> ... -> A_length with nullhomotopic adjacent
/// composites.
std::vector<ChainMap> random_toda_diagram(const Ring& R, Rng& rng, std::size_t length,
                                          const RandomShape& shape);

/// Rows of `basis` (a lattice or subspace basis) in reduced form: echelon form
/// over a field, Hermite form over Z.
Matrix reduced_row_basis(const Ring& R, const Matrix& rows);

}  // namespace toda
