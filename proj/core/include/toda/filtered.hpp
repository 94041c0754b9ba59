#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toda/bracket.hpp"

namespace toda {

/// Extended forward cube on digits {1, 2, 3} together with the comparisons
/// from its {1, 2} face to the originating ternary cube.
struct ForwardDiagram {
    CubeDiagram F;
    std::map<CubeIndex, ChainMap> comparison;  // F(J) -> E(J), J in {1,2}^n (forward labels)
};

/// Cofibrant replacement of the {1, 2} face of E, extended along every axis
/// to digit 3 by strict cofibration sequences.
ForwardDiagram forward_diagram(const CubeDiagram& E);

/// Quasi-isomorphism F(..3..) -> suspension(E(..0..)) for a forward vertex
/// with a single digit 3 at `axis`, the other digits in {1, 2}.
ChainMap forward_suspension_witness(const ForwardDiagram& fd, const CubeDiagram& E, const CubeIndex& J);

/// verify_extended on F and a quasi-isomorphic witness at every single-3 vertex.
VerifyReport verify_forward(const ForwardDiagram& fd, const CubeDiagram& E);

/// X_0 -> X_1 -> ... -> X_l with split quotients C_k = X_k / X_{k-1}
/// (C_0 = X_0), projections r_{k-1}: X_k -> C_k and connecting maps
/// delta_k: C_{k+1} -> suspension(X_k).
struct FilteredObject {
    std::vector<ComplexPtr> stages;
    std::vector<ChainMap> inclusions;                 // j_k: X_k -> X_{k+1}
    std::vector<std::optional<ChainMap>> attaching;   // g_k: B_k -> X_k, optional

    std::vector<ComplexPtr> quotients;    // C_0 .. C_l
    std::vector<ChainMap> projections;    // r_{k-1}: X_k -> C_k, k = 0 .. l
    std::vector<GradedMap> sections;      // module sections of the projections
    std::vector<ChainMap> connecting;     // delta_k, k = 0 .. l-1
    std::vector<ChainMap> attaching_witness;  // cone(g_k) -> X_{k+1} where g_k is given

    std::size_t length() const noexcept { return stages.size() - 1; }
    const ComplexPtr& top() const { return stages.back(); }
    /// j_X: X_0 -> X_l.
    ChainMap inclusion_of_bottom() const;
};

/// Builds the quotients and connecting maps. Every inclusion must be a
/// cofibration; attaching maps g_k must satisfy cone(g_k) ~ X_{k+1} and
/// delta_k ~ suspension(g_k) (PreconditionError otherwise).
FilteredObject make_filtered_object(ComplexPtr X0, std::vector<ChainMap> inclusions,
                                    std::vector<std::optional<ChainMap>> attaching = {});

/// Stages F(J^k), k = 1 .. n, along the spine J^k = (1..1 2..2) with n-k+1
/// leading ones.
FilteredObject filtered_from_forward(const ForwardDiagram& fd);

/// gamma_{k+1} = suspension(r_{k-1}) delta_k : C_{k+1} -> suspension(C_k), k = 0 .. l-1.
std::vector<ChainMap> gamma_maps(const FilteredObject& X);

/// W -> C_l -> S C_{l-1} -> ... -> S^l C_0 -> S^l Z with end maps r_{l-1} alpha
/// and S^l(phi j_X); witnesses solve every adjacent composite.
TodaDiagramInput to_toda_diagram(const FilteredObject& X, const ChainMap& alpha, const ChainMap& phi);

struct GeneralizedBracket {
    Element value;
    std::vector<Scalar> group_orders;  // of [W, Z]
    bool is_zero = false;
};

/// Class of phi alpha in [W, Z]. When given, `first` (W -> C_l) and `last`
/// (C_0 -> Z) must be homotopic to r_{l-1} alpha and phi j_X.
GeneralizedBracket generalized_bracket(const FilteredObject& X, const ChainMap& alpha, const ChainMap& phi,
                                       const std::optional<ChainMap>& first = std::nullopt,
                                       const std::optional<ChainMap>& last = std::nullopt);

/// Lowest nonzero homology degrees c_{-1}, c_0, ..., c_{l+1}; nullopt for an
/// acyclic object.
struct SphericalProfile {
    std::vector<std::optional<int>> c;

    std::size_t length() const noexcept { return c.size() < 3 ? 0 : c.size() - 3; }
    /// Comma separated, c_{-1} first; "inf" or an empty field marks an acyclic entry.
    static SphericalProfile parse(const std::string& text);
    std::string str() const;
};

struct SphericalReport {
    bool spherical = true;
    std::string message;  // first violated condition
};

/// If c_k + 1 = c_{k+1} then c_{k-1} + 1 < c_k and c_{k+1} + 1 < c_{k+2},
/// wherever the entries exist.
SphericalReport spherical_check(const SphericalProfile& p);

/// c_{-1} from Z, c_k from C_k, c_{l+1} from W.
SphericalProfile profile(const FilteredObject& X, const ComplexPtr& W, const ComplexPtr& Z);

struct TrivialityReport {
    bool trivial = true;
    std::size_t pairs_checked = 0;
    std::string message;
};

/// For quotients with zero differential, checks that every adjacent pair of
/// middle maps composes to the zero matrix; the middle segment is then strict
/// and every generalized bracket on X contains zero.
TrivialityReport sphere_wedge_triviality_check(const FilteredObject& X);

}  // namespace toda
