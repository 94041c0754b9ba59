#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toda/chain.hpp"
#include "toda/cube.hpp"

namespace toda {

/// Assignment of complexes to the vertices of a cube poset and chain maps to
/// its covering pairs (J, J + e_i).
class CubeDiagram {
public:
    CubeDiagram(std::size_t n, Alphabet alphabet) : n_(n), alphabet_(alphabet) {}

    std::size_t dimension() const noexcept { return n_; }
    Alphabet alphabet() const noexcept { return alphabet_; }

    void set_vertex(const CubeIndex& j, ComplexPtr c);
    void set_edge(const CubeIndex& from, std::size_t axis, ChainMap f);

    const ComplexPtr& vertex(const CubeIndex& j) const;
    bool has_vertex(const CubeIndex& j) const { return vertices_.count(j) > 0; }
    /// Edge out of `from` along `axis` (digit + 1).
    const ChainMap& edge(const CubeIndex& from, std::size_t axis) const;
    /// Composite along the path raising digits left to right; identity when a == b.
    ChainMap map(const CubeIndex& a, const CubeIndex& b) const;

    /// All vertex indices in lexicographic order.
    std::vector<CubeIndex> indices() const;
    const std::map<CubeIndex, ComplexPtr>& vertices() const noexcept { return vertices_; }
    const std::map<std::pair<CubeIndex, std::size_t>, ChainMap>& edges() const noexcept { return edges_; }

    /// Total rank summed over every vertex.
    std::size_t total_rank() const;

private:
    std::size_t n_;
    Alphabet alphabet_;
    std::map<CubeIndex, ComplexPtr> vertices_;
    std::map<std::pair<CubeIndex, std::size_t>, ChainMap> edges_;
};

/// Optional replacement of the latching-map summand D-hat(J') -> D(J) used by
/// cofibrant replacement; returning nullopt selects D(J' -> J) q_{J'}.
using LatchingOverride =
    std::function<std::optional<ChainMap>(const CubeIndex& j, const CubeIndex& summand, const ComplexPtr& hat)>;

struct CofibrantReplacement {
    CubeDiagram hat;                         // binary, every edge a cofibration
    std::map<CubeIndex, ChainMap> comparison;  // q_J: hat(J) -> D(J), quasi-isomorphisms
};

/// Vertexwise cylinder replacement over the latching objects, in order of
/// filtration level then lexicographic order.
CofibrantReplacement cofibrant_replacement(const CubeDiagram& D, const LatchingOverride& override = {});

/// Enhanced strictification of a length-n Toda diagram.
struct EnhancedStrictification {
    CubeDiagram hat;
    std::map<CubeIndex, ChainMap> comparison;  // hat(J) -> D(J); D is A_k on the spine, 0 elsewhere
    std::vector<ComplexPtr> objects;           // A_0 .. A_n
    std::vector<ChainMap> maps;                // f_0 .. f_{n-1} as supplied
    std::optional<GradedMap> nullhomotopy;     // F with f1 f0 = dF + Fd (length 2 only)
};

/// Length-2 strictification from f0, f1 and a nullhomotopy F of f1 f0.
EnhancedStrictification strictify_length2(const ChainMap& f0, const ChainMap& f1, const GradedMap& F);

/// Strictification of a spine whose adjacent composites are strictly zero.
EnhancedStrictification strictify_strict(const std::vector<ChainMap>& maps);

/// Extension of a cofibrant binary cube to the ternary cube by strict
/// cofibration sequences: E(J) is hat(J') modulo the images along every axis
/// where J carries a 2, J' being J with 2 replaced by 1.
CubeDiagram extend_cube(const CubeDiagram& hat);

struct VerifyReport {
    bool ok = true;
    std::string message;  // first failure, empty when ok
    std::size_t triples_checked = 0;
    std::size_t squares_checked = 0;
};

/// Checks every axis triple for split exactness and every square for strict
/// commutation. Works for the ternary and forward alphabets.
VerifyReport verify_extended(const CubeDiagram& E);

/// The face with first digit 1, reindexed to dimension n - 1.
CubeDiagram middle_cube(const CubeDiagram& E);

/// Face obtained by fixing `axis` to `digit`, reindexed to dimension n - 1.
CubeDiagram face(const CubeDiagram& E, std::size_t axis, int digit);

/// Adds `shift` to every digit and changes the alphabet.
CubeDiagram relabel(const CubeDiagram& D, int shift, Alphabet alphabet);

/// Deterministic DOT digraph, vertices in lexicographic order.
std::string render_dot(const CubeDiagram& D);

}  // namespace toda
