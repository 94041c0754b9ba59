#include "toda/bracket.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bracket_internal.hpp"
#include "toda/smith.hpp"

namespace toda {

namespace {

const GradedMap& G(const ChainMap& f) { return f; }

CubeIndex ternary(std::vector<int> d) { return CubeIndex(std::move(d), Alphabet::Ternary); }

}  // namespace

namespace detail {

Matrix unit_pseudo_inverse(const Ring& R, const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return Matrix(a.cols(), a.rows());
    auto sf = smith_normal_form(R, a);
    if (!sf.all_units()) throw PreconditionError("map is not split");
    return multiply(R, sf.V.col_range(0, sf.rank), sf.U.row_range(0, sf.rank));
}

}  // namespace detail

std::string SearchPolicy::describe() const {
    std::ostringstream os;
    os << "enumerate=" << (enumerate == Enumerate::All ? "all" : "first") << " max_choices=" << max_choices;
    return os.str();
}

// ---- input ----

std::vector<ComplexPtr> TodaDiagramInput::objects() const {
    std::vector<ComplexPtr> out;
    if (maps.empty()) return out;
    out.push_back(maps[0].source());
    for (const auto& f : maps) out.push_back(f.target());
    return out;
}

void TodaDiagramInput::validate() const {
    if (maps.empty()) throw InvalidInput("diagram has no maps");
    for (std::size_t k = 0; k + 1 < maps.size(); ++k)
        if (!(*maps[k].target() == *maps[k + 1].source()))
            throw InvalidInput("maps[" + std::to_string(k) + "] and maps[" + std::to_string(k + 1) +
                               "] do not compose");
    if (!witnesses.empty() && witnesses.size() + 1 != maps.size())
        throw InvalidInput("witnesses: expected one per adjacent composite");
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        auto c = compose(maps[k + 1], maps[k]);
        const std::string name = "f" + std::to_string(k + 1) + " f" + std::to_string(k);
        if (!witnesses.empty() && witnesses[k]) {
            if (!is_homotopy(c, ChainMap::zero(c.source(), c.target()), *witnesses[k]))
                throw PreconditionError("witness for " + name + " is not a nullhomotopy");
        } else if (!solve_nullhomotopy(c)) {
            throw PreconditionError("composite " + name + " is not nullhomotopic");
        }
    }
}

// ---- split pairs ----

ChainMap SplitPair::connecting() const {
    SplitCofiber sc{inclusion, projection.target(), projection, section, retraction};
    return sc.connecting();
}

SplitPair split_pair(const ChainMap& j, const ChainMap& p) {
    if (!(*j.target() == *p.source())) throw InvalidInput("split_pair: maps do not compose");
    if (!compose(p, j).is_zero()) throw PreconditionError("split_pair: composite is not zero");
    const auto& X = j.source();
    const auto& Y = j.target();
    const auto& Q = p.target();
    const Ring& R = Y->ring();
    GradedMap s(Q, Y, 0), r(Y, X, 0);
    if (!Y->is_zero())
        for (int n = Y->min_degree(); n <= Y->max_degree(); ++n) {
            Matrix jn = j.at(n), pn = p.at(n);
            if (rank(R, jn) != jn.cols() || rank(R, pn) != pn.rows() || jn.cols() + pn.rows() != jn.rows())
                throw PreconditionError("split_pair: not split exact at degree " + std::to_string(n));
            Matrix sn = detail::unit_pseudo_inverse(R, pn);
            Matrix left = detail::unit_pseudo_inverse(R, jn);
            Matrix rest = subtract(R, Matrix::identity(Y->dim(n)), multiply(R, sn, pn));
            s.set(n, sn);
            r.set(n, multiply(R, left, rest));
        }
    return SplitPair{j, p, std::move(s), std::move(r)};
}

ChainMap extend_over_cofiber(const SplitPair& sp, const ChainMap& phi, const GradedMap& H) {
    auto t = compose(phi, sp.inclusion);
    if (!is_homotopy(t, ChainMap::zero(t.source(), t.target()), H))
        throw PreconditionError("extension: H is not a nullhomotopy of phi j");
    GradedMap corrected = subtract(G(phi), hom_boundary(compose(H, sp.retraction)));
    return ChainMap(compose(corrected, sp.section));
}

// ---- engine ----

BracketEngine::BracketEngine(CubeDiagram E, ComplexPtr target, ChainMap phi_top)
    : E_(std::move(E)),
      A_(std::move(target)),
      phi_top_(std::move(phi_top)),
      n_(E_.dimension()),
      alpha_(ChainMap::zero(A_, A_)),
      w_(alpha_),
      v_(alpha_),
      alpha_v_(alpha_),
      psi_split_{alpha_, alpha_, GradedMap(A_, A_, 0), GradedMap(A_, A_, 0)} {
    if (n_ < 1) throw InvalidInput("bracket: cube dimension must be at least 1");
    if (E_.alphabet() != Alphabet::Ternary) throw InvalidInput("bracket: ternary cube required");
    const std::size_t n = n_;
    if (!(*phi_top_.source() == *E_.vertex(ternary(std::vector<int>(n, 1)))))
        throw InvalidInput("bracket: phi does not start at E(1,...,1)");
    if (!(*phi_top_.target() == *A_)) throw InvalidInput("bracket: phi does not end at the target");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t m = n - 1 - i;
        std::vector<int> d(n, 2);
        for (std::size_t t = 0; t <= m; ++t) d[t] = 1;
        auto J1 = ternary(d);
        auto J0 = J1.with(m, 0);
        Step st{split_pair(E_.edge(J0, m), E_.edge(J1, m)),
                std::make_shared<HomGroup>(E_.vertex(J0), A_, 1),
                std::make_shared<BoundarySolver>(E_.vertex(J0), A_, 1)};
        steps_.push_back(std::move(st));
    }
    std::vector<int> d0(n, 2);
    d0[0] = 0;
    auto J0 = ternary(d0);
    alpha_ = E_.edge(J0, 0);
    w_ = ChainMap::identity(E_.vertex(J0));
    for (std::size_t m = 1; m < n; ++m) {
        std::vector<int> d(n, 2);
        for (std::size_t t = 0; t <= m; ++t) d[t] = 0;
        auto K0 = ternary(d);
        auto sp = split_pair(E_.edge(K0, m), E_.edge(K0.with(m, 1), m));
        w_ = compose(suspension(sp.connecting(), int(m) - 1), w_);
    }
    v_ = n == 1 ? w_ : homotopy_inverse(w_).inverse;
    alpha_v_ = compose(alpha_, v_);
    value_group_ = std::make_shared<HomGroup>(w_.target(), A_, 0);
    psi_split_ = split_pair(alpha_, E_.edge(J0.with(0, 1), 0));
    psi_group_ = std::make_shared<HomGroup>(E_.vertex(J0), A_, 1);
    psi_solver_ = std::make_shared<BoundarySolver>(E_.vertex(J0), A_, 1);
    if (!steps_.empty()) {
        const auto& last = steps_.back();
        for (std::size_t i = 0; i < last.group->rank(); ++i) {
            auto g = last.group->generator(i);
            GradedMap change = scale(-1, compose(hom_boundary(compose(g, last.split.retraction)), last.split.section));
            last_diffs_.push_back(value(ChainMap(std::move(change))));
        }
    }
}

std::optional<ChainMap> BracketEngine::step(std::size_t i, const ChainMap& phi, const Element& choice) const {
    const auto& st = steps_.at(i);
    auto t = compose(phi, st.split.inclusion);
    auto H = st.solver->solve(t);
    if (!H) return std::nullopt;
    if (!st.group->is_zero(choice)) *H = add(*H, st.group->representative(choice));
    return extend_over_cofiber(st.split, phi, *H);
}

std::optional<ChainMap> BracketEngine::phi_partial(const std::vector<Element>& choices, std::size_t count) const {
    std::optional<ChainMap> cur = phi_top_;
    for (std::size_t i = 0; i < count && cur; ++i)
        cur = step(i, *cur, i < choices.size() ? choices[i] : steps_[i].group->zero());
    return cur;
}

std::optional<ChainMap> BracketEngine::phi(const std::vector<Element>& choices) const {
    return phi_partial(choices, steps_.size());
}

Element BracketEngine::value(const ChainMap& phi_n) const {
    return value_group_->class_of(compose(G(phi_n), G(alpha_v_)));
}

std::optional<ChainMap> BracketEngine::psi(const ChainMap& phi_n, const Element& choice) const {
    auto t = compose(phi_n, alpha_);
    auto H = psi_solver_->solve(t);
    if (!H) return std::nullopt;
    if (!psi_group_->is_zero(choice)) *H = add(*H, psi_group_->representative(choice));
    return extend_over_cofiber(psi_split_, phi_n, *H);
}

}  // namespace toda
