#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toda/diagram.hpp"
#include "toda/hom.hpp"

namespace toda {

enum class Enumerate { First, All };

struct SearchPolicy {
    Enumerate enumerate = Enumerate::All;
    std::size_t max_choices = 4096;  // per enumerated choice space
    std::size_t max_nodes = 512;     // rectify search budget
    std::size_t max_stage = 4;       // largest cube dimension

    std::string describe() const;
};

/// f_0, ..., f_{n-1} with optional witnesses H_k for f_{k+1} f_k = dH_k + H_k d.
struct TodaDiagramInput {
    std::vector<ChainMap> maps;
    std::vector<std::optional<GradedMap>> witnesses;

    std::vector<ComplexPtr> objects() const;
    /// Endpoint check (InvalidInput) and nullhomotopy check of every adjacent
    /// composite (PreconditionError naming the composite).
    void validate() const;
};

/// Split short exact sequence X -j-> Y -p-> Q with j r + s p = 1, r s = 0.
struct SplitPair {
    ChainMap inclusion;
    ChainMap projection;
    GradedMap section;
    GradedMap retraction;
    /// r d s : Q -> suspension(X).
    ChainMap connecting() const;
};
SplitPair split_pair(const ChainMap& j, const ChainMap& p);

/// (phi - D(H r)) s, the map on the cofiber extending phi once phi j = D(H).
ChainMap extend_over_cofiber(const SplitPair& sp, const ChainMap& phi, const GradedMap& H);

/// Bracket machinery on a fixed extended cube E of dimension n >= 1 and a map
/// phi_top: E(1,...,1) -> A. phi_n on E(1,2,...,2) is reached by extending
/// along the axes n-1, ..., 1 in turn; each extension picks a homotopy H from
/// the degree-1 group of the step.
class BracketEngine {
public:
    BracketEngine(CubeDiagram E, ComplexPtr target, ChainMap phi_top);

    std::size_t dimension() const noexcept { return n_; }
    const CubeDiagram& cube() const noexcept { return E_; }
    const ComplexPtr& target() const noexcept { return A_; }
    const ChainMap& phi_top() const noexcept { return phi_top_; }

    std::size_t steps() const noexcept { return steps_.size(); }
    /// Axis extended at step i (n-1-i).
    std::size_t step_axis(std::size_t i) const noexcept { return n_ - 1 - i; }
    const HomGroup& step_group(std::size_t i) const { return *steps_[i].group; }
    const SplitPair& step_split(std::size_t i) const { return steps_[i].split; }

    /// One extension step; nullopt when phi j is not nullhomotopic.
    std::optional<ChainMap> step(std::size_t i, const ChainMap& phi, const Element& choice) const;
    /// phi_n for the given per-step choices (missing trailing choices are zero).
    std::optional<ChainMap> phi(const std::vector<Element>& choices) const;
    /// Runs steps [0, count) and returns the partial phi.
    std::optional<ChainMap> phi_partial(const std::vector<Element>& choices, std::size_t count) const;

    /// E(0,2,...,2) -> E(1,2,...,2).
    const ChainMap& alpha() const noexcept { return alpha_; }
    /// Composite of suspended connecting maps E(0,2,...,2) -> suspension^{n-1}(A_0).
    const ChainMap& suspension_equivalence() const noexcept { return w_; }
    const ChainMap& suspension_inverse() const noexcept { return v_; }
    /// [suspension^{n-1} A_0, A]
    const HomGroup& value_group() const noexcept { return *value_group_; }

    Element value(const ChainMap& phi_n) const;
    /// Value changes caused by the generators of the last step group; the
    /// value is affine in the last choice with these as linear part.
    const std::vector<Element>& last_step_differences() const noexcept { return last_diffs_; }
    Subgroup last_step_subgroup() const { return value_group_->subgroup_generated_by(last_diffs_); }

    /// Degree-1 group on E(0,2,...,2) parameterizing extensions psi.
    const HomGroup& psi_group() const { return *psi_group_; }
    const SplitPair& psi_split() const noexcept { return psi_split_; }
    /// psi_n on E(2,...,2); nullopt when phi_n alpha is not nullhomotopic.
    std::optional<ChainMap> psi(const ChainMap& phi_n, const Element& choice) const;

private:
    struct Step {
        SplitPair split;
        std::shared_ptr<HomGroup> group;
        std::shared_ptr<BoundarySolver> solver;
    };
    CubeDiagram E_;
    ComplexPtr A_;
    ChainMap phi_top_;
    std::size_t n_;
    std::vector<Step> steps_;
    ChainMap alpha_, w_, v_, alpha_v_;
    std::shared_ptr<HomGroup> value_group_, psi_group_;
    std::shared_ptr<BoundarySolver> psi_solver_;
    SplitPair psi_split_;
    std::vector<Element> last_diffs_;
};

/// Data of a bracket <f_0, ..., f_n>: the extended cube of a strictification
/// of the initial segment, phi_n and alpha_n.
struct BracketData {
    CubeDiagram E;
    std::map<CubeIndex, ChainMap> comparison;  // hat(J) -> D(J) on the binary face
    std::vector<ChainMap> spine_comparisons;   // D(J_k) -> A_k, k = 0 .. n
    std::vector<ComplexPtr> objects;           // A_0 .. A_{n+1}
    std::vector<ChainMap> maps;                // f_0 .. f_n
    ChainMap phi_top;                          // E(1,...,1) -> A_{n+1}
    std::optional<ChainMap> phi;               // phi_n for zero choices, if defined
    ChainMap alpha;                            // E(0,2,...,2) -> E(1,2,...,2)
    std::shared_ptr<const BracketEngine> engine;

    std::size_t n() const noexcept { return E.dimension(); }
};

/// `maps` are f_0 .. f_n; `spine_comparisons` default to identities, which
/// requires D(J_k) = A_k.
BracketData make_bracket_data(const EnhancedStrictification& S, const std::vector<ChainMap>& maps,
                              std::vector<ChainMap> spine_comparisons = {});

struct BracketResult {
    std::size_t n = 0;
    std::vector<Scalar> group_orders;  // of [suspension^{n-1} A_0, A_{n+1}]
    Element value;
    Subgroup indeterminacy;
    Coset value_set;
    bool contains_zero = false;
    std::optional<std::vector<Element>> enumerated;  // exact value list, finite rings
    std::string search_policy;
    bool exhaustive = false;
};

/// Value for the base choices, indeterminacy swept over the choices of phi
/// permitted by the policy (classical two-sided subgroup when n = 2).
BracketResult bracket_value(const BracketData& data, const SearchPolicy& policy = {});

BracketResult triple_bracket(const ChainMap& f0, const ChainMap& f1, const ChainMap& f2,
                             const SearchPolicy& policy = {});

/// <f_0, ..., f_n> for n >= 2; the initial segment is first rectified.
BracketResult higher_bracket(const std::vector<ChainMap>& maps, const SearchPolicy& policy = {});

/// f2_*[sA0, A2] + (s f0)^*[sA1, A3] inside [sA0, A3].
Subgroup classical_indeterminacy(const ChainMap& f0, const ChainMap& f1, const ChainMap& f2);

struct OracleResult {
    Coset value_set;
    std::vector<Scalar> group_orders;
    std::optional<std::vector<Element>> enumerated;
};

/// Classes of f2 F - G f0 over all nullhomotopies F of f1 f0 and G of f2 f1,
/// read in [suspension(A0), A3].
OracleResult massey_oracle(const ChainMap& f0, const ChainMap& f1, const ChainMap& f2,
                           const SearchPolicy& policy = {});

/// psi_n: E(2,...,2) -> A_{n+1} from a nullhomotopy of phi alpha.
ChainMap extend_psi(const BracketData& data, const GradedMap& proof);
ChainMap extend_psi(const BracketData& data, const ChainMap& phi, const GradedMap& proof);

struct StrictDiagram {
    std::vector<ChainMap> maps;         // adjacent composites strictly zero
    std::vector<ChainMap> comparisons;  // S_k -> A_k, quasi-isomorphisms
};

/// E(0,...,0) -> E(1,0,...,0) -> E(2,1,0,...,0) -> ... -> E(2,...,2,1) -> A_{n+1},
/// the last map being psi_n precomposed with E(2,...,2,1) -> E(2,...,2).
StrictDiagram strictification_from_psi(const BracketData& data, const ChainMap& psi);

/// Strict zero composites, quasi-isomorphic comparisons and homotopy
/// commutativity c_{k+1} g_k ~ f_k c_k.
VerifyReport verify_strictification(const StrictDiagram& S, const std::vector<ChainMap>& maps);

struct RectifyResult {
    bool success = false;
    StrictDiagram strict;
    std::size_t stage = 0;               // bracket length n of the obstruction
    std::vector<BracketResult> values;   // value sets met at that stage
    bool search_exhausted = false;
    std::size_t nodes = 0;
    std::string caveat;
    std::string search_policy;
};

RectifyResult rectify(const TodaDiagramInput& input, const SearchPolicy& policy = {});

}  // namespace toda
