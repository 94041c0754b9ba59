#pragma once

#include <optional>
#include <vector>

#include "toda/bracket.hpp"

namespace toda::detail {

struct ChoiceList {
    std::vector<Element> items;  // the zero element first
    bool complete = false;       // every element of the group is listed
};

/// All elements when the policy enumerates and the group is finite and small,
/// otherwise zero followed (under enumerate=all) by the generators.
ChoiceList choices_for(const HomGroup& g, const SearchPolicy& policy);

/// Cartesian product of choice lists, truncated at `cap` combinations.
ChoiceList product(const std::vector<const HomGroup*>& groups, const SearchPolicy& policy);

/// Integer coefficients x with target + sum x_i gens_i = 0 in the group.
std::optional<std::vector<Scalar>> solve_in_group(const HomGroup& g, const std::vector<Element>& gens,
                                                  const Element& target);

/// Integer combination of group generators as a representative cycle.
GradedMap combination(const HomGroup& g, const std::vector<Scalar>& coeffs);

/// Elements of x + S, listed when the ambient group has at most `cap` elements.
std::optional<std::vector<Element>> coset_elements(const HomGroup& g, const Coset& c, std::size_t cap);

/// Degree-1 map A -> B read as a degree-0 map suspension(A) -> B.
GradedMap as_suspended(const GradedMap& h, const ComplexPtr& sA);

bool is_finite_ring(const Ring& R);

/// Right or left inverse of a matrix whose invariant factors are all units.
Matrix unit_pseudo_inverse(const Ring& R, const Matrix& a);

}  // namespace toda::detail
