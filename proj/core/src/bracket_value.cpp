#include <algorithm>
#include <set>

#include "bracket_internal.hpp"
#include "toda/smith.hpp"

namespace toda {

namespace detail {

bool is_finite_ring(const Ring& R) { return R.is_field(); }

ChoiceList choices_for(const HomGroup& g, const SearchPolicy& policy) {
    ChoiceList out;
    if (g.rank() == 0) return {{g.zero()}, true};
    if (policy.enumerate == Enumerate::First) return {{g.zero()}, false};
    auto order = g.order();
    if (order && *order <= policy.max_choices) return {g.elements(policy.max_choices), true};
    out.items.push_back(g.zero());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        Element e = g.zero();
        e[i] = 1;
        out.items.push_back(g.normalize(e));
    }
    return out;
}

ChoiceList product(const std::vector<const HomGroup*>& groups, const SearchPolicy& policy) {
    ChoiceList out{{}, true};
    std::vector<std::vector<Element>> combos{{}};
    for (const auto* g : groups) {
        auto c = choices_for(*g, policy);
        out.complete = out.complete && c.complete;
        std::vector<std::vector<Element>> next;
        for (const auto& prefix : combos)
            for (const auto& e : c.items) {
                if (next.size() >= policy.max_choices) {
                    out.complete = false;
                    break;
                }
                auto p = prefix;
                p.push_back(e);
                next.push_back(std::move(p));
            }
        combos = std::move(next);
    }
    // flatten: each combination is stored as consecutive elements
    out.items.clear();
    std::vector<Element> flat;
    for (auto& c : combos)
        for (auto& e : c) flat.push_back(std::move(e));
    out.items = std::move(flat);
    return out;
}

std::optional<std::vector<Scalar>> solve_in_group(const HomGroup& g, const std::vector<Element>& gens,
                                                  const Element& target) {
    const std::size_t m = g.rank();
    if (m == 0) return std::vector<Scalar>(gens.size(), 0);
    std::vector<std::size_t> finite;
    for (std::size_t i = 0; i < m; ++i)
        if (g.orders()[i] != 0) finite.push_back(i);
    Matrix M(m, gens.size() + finite.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
        for (std::size_t r = 0; r < m; ++r) M(r, c) = gens[c][r];
    for (std::size_t t = 0; t < finite.size(); ++t) M(finite[t], gens.size() + t) = g.orders()[finite[t]];
    std::vector<Scalar> b(m);
    for (std::size_t r = 0; r < m; ++r) b[r] = -target[r];
    const Ring Z = Ring::integers();
    auto sf = smith_normal_form(Z, M);
    auto x = solve(Z, sf, b);
    if (!x) return std::nullopt;
    x->resize(gens.size());
    return x;
}

GradedMap combination(const HomGroup& g, const std::vector<Scalar>& coeffs) {
    GradedMap out(g.source(), g.target(), g.degree());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) out = add(out, scale(coeffs[i], g.generator(i)));
    return out;
}

std::optional<std::vector<Element>> coset_elements(const HomGroup& g, const Coset& c, std::size_t cap) {
    auto order = g.order();
    if (!order || *order > cap) return std::nullopt;
    std::vector<Element> out;
    for (auto& x : g.elements(cap))
        if (c.contains(x)) out.push_back(std::move(x));
    return out;
}

GradedMap as_suspended(const GradedMap& h, const ComplexPtr& sA) {
    GradedMap out(sA, h.target(), 0);
    const auto& A = *h.source();
    if (!A.is_zero())
        for (int n = A.min_degree(); n <= A.max_degree(); ++n) out.set(n + 1, h.at(n));
    return out;
}

}  // namespace detail

using namespace detail;

namespace {

const GradedMap& G(const ChainMap& f) { return f; }

void check_triple(const ChainMap& f0, const ChainMap& f1, const ChainMap& f2) {
    TodaDiagramInput in{{f0, f1, f2}, {}};
    in.validate();
}

// Combinations in `list` are stored flat, `width` elements each.
std::vector<std::vector<Element>> unflatten(const std::vector<Element>& flat, std::size_t width) {
    std::vector<std::vector<Element>> out;
    if (width == 0) return {{}};
    for (std::size_t i = 0; i < flat.size(); i += width)
        out.emplace_back(flat.begin() + std::ptrdiff_t(i), flat.begin() + std::ptrdiff_t(i + width));
    return out;
}

}  // namespace

BracketData make_bracket_data(const EnhancedStrictification& S, const std::vector<ChainMap>& maps,
                              std::vector<ChainMap> spine_comparisons) {
    auto E = extend_cube(S.hat);
    const std::size_t n = E.dimension();
    if (maps.size() != n + 1) throw InvalidInput("bracket data: expected " + std::to_string(n + 1) + " maps");
    if (spine_comparisons.empty())
        for (std::size_t k = 0; k <= n; ++k)
            spine_comparisons.push_back(ChainMap::identity(S.comparison.at(vertex_Jk(n, k)).target()));
    if (spine_comparisons.size() != n + 1) throw InvalidInput("bracket data: wrong number of comparisons");
    std::vector<ComplexPtr> objects{maps[0].source()};
    for (const auto& f : maps) objects.push_back(f.target());
    auto phi_top = compose(maps[n], compose(spine_comparisons[n], S.comparison.at(vertex_Jk(n, n))));
    auto engine = std::make_shared<const BracketEngine>(E, maps[n].target(), phi_top);
    auto phi = engine->phi({});
    return BracketData{std::move(E), S.comparison, std::move(spine_comparisons), std::move(objects), maps,
                       phi_top, std::move(phi), engine->alpha(), engine};
}

Subgroup classical_indeterminacy(const ChainMap& f0, const ChainMap& f1, const ChainMap& f2) {
    const auto& A0 = f0.source();
    auto sA0 = suspension(A0);
    HomGroup VG(sA0, f2.target(), 0);
    HomGroup Y(A0, f1.target(), 1), Zg(f0.target(), f2.target(), 1);
    std::vector<Element> gens;
    for (std::size_t i = 0; i < Y.rank(); ++i) gens.push_back(VG.class_of(as_suspended(compose(G(f2), Y.generator(i)), sA0)));
    for (std::size_t i = 0; i < Zg.rank(); ++i)
        gens.push_back(VG.class_of(as_suspended(compose(Zg.generator(i), G(f0)), sA0)));
    return VG.subgroup_generated_by(gens);
}

BracketResult bracket_value(const BracketData& data, const SearchPolicy& policy) {
    const auto& eng = *data.engine;
    const std::size_t n = data.n();
    const auto& VG = eng.value_group();
    BracketResult res;
    res.n = n;
    res.group_orders = VG.orders();
    res.search_policy = policy.describe();
    std::vector<const HomGroup*> inner;
    for (std::size_t i = 0; i + 1 < eng.steps(); ++i) inner.push_back(&eng.step_group(i));
    auto combos = product(inner, policy);
    const Subgroup last = eng.last_step_subgroup();
    std::vector<Element> reps;
    bool zero = false;
    for (const auto& combo : unflatten(combos.items, inner.size())) {
        auto phi = eng.phi(combo);
        if (!phi) continue;
        auto v = eng.value(*phi);
        if (Coset{v, last}.contains_zero()) zero = true;
        reps.push_back(std::move(v));
    }
    if (reps.empty())
        throw PreconditionError("bracket undefined: an inner bracket does not vanish for any enumerated choice");
    res.value = reps.front();
    std::vector<Element> gens = eng.last_step_differences();
    for (const auto& r : reps) gens.push_back(VG.add(r, VG.negate(res.value)));
    if (n == 2) {
        res.indeterminacy = classical_indeterminacy(data.maps[0], data.maps[1], data.maps[2]);
    } else {
        res.indeterminacy = VG.subgroup_generated_by(gens);
    }
    res.value_set = Coset{res.value, res.indeterminacy};
    res.contains_zero = n == 2 ? res.value_set.contains_zero() : zero;
    const bool finite = is_finite_ring(VG.ring());
    res.exhaustive = finite && combos.complete;
    if (finite && policy.enumerate == Enumerate::All && combos.complete) {
        std::set<Element> all;
        bool ok = true;
        for (const auto& r : reps) {
            auto el = coset_elements(VG, Coset{r, last}, policy.max_choices);
            if (!el) {
                ok = false;
                break;
            }
            all.insert(el->begin(), el->end());
        }
        if (ok) res.enumerated = std::vector<Element>(all.begin(), all.end());
    }
    return res;
}

BracketResult triple_bracket(const ChainMap& f0, const ChainMap& f1, const ChainMap& f2, const SearchPolicy& policy) {
    check_triple(f0, f1, f2);
    auto F0 = solve_nullhomotopy(compose(f1, f0));
    HomGroup Y(f0.source(), f1.target(), 1);
    auto Fs = choices_for(Y, policy);
    std::optional<BracketResult> first;
    std::set<Element> all;
    bool complete = Fs.complete;
    for (const auto& y : Fs.items) {
        GradedMap F = Y.is_zero(y) ? *F0 : add(*F0, Y.representative(y));
        auto data = make_bracket_data(strictify_length2(f0, f1, F), {f0, f1, f2});
        auto r = bracket_value(data, policy);
        if (r.enumerated) {
            all.insert(r.enumerated->begin(), r.enumerated->end());
        } else {
            complete = false;
        }
        if (!first) first = std::move(r);
    }
    BracketResult res = std::move(*first);
    res.exhaustive = complete && is_finite_ring(f0.ring());
    res.enumerated.reset();
    if (res.exhaustive && policy.enumerate == Enumerate::All) res.enumerated = std::vector<Element>(all.begin(), all.end());
    return res;
}

OracleResult massey_oracle(const ChainMap& f0, const ChainMap& f1, const ChainMap& f2, const SearchPolicy& policy) {
    check_triple(f0, f1, f2);
    const auto& A0 = f0.source();
    auto sA0 = suspension(A0);
    HomGroup VG(sA0, f2.target(), 0);
    HomGroup Y(A0, f1.target(), 1), Zg(f0.target(), f2.target(), 1);
    auto F0 = *solve_nullhomotopy(compose(f1, f0));
    auto G0 = *solve_nullhomotopy(compose(f2, f1));
    // Oriented as f2 F - G f0 so that suspension(A0) is identified with the
    // cofiber through the connecting map r d s.
    auto value = [&](const GradedMap& F, const GradedMap& Gm) {
        return VG.class_of(as_suspended(subtract(compose(G(f2), F), compose(Gm, G(f0))), sA0));
    };
    OracleResult out;
    out.group_orders = VG.orders();
    const Element rep = value(F0, G0);
    auto ys = choices_for(Y, policy), zs = choices_for(Zg, policy);
    if (is_finite_ring(f0.ring()) && ys.complete && zs.complete &&
        ys.items.size() * zs.items.size() <= policy.max_choices * 16) {
        std::set<Element> vals;
        for (const auto& y : ys.items) {
            GradedMap F = add(F0, Y.representative(y));
            for (const auto& z : zs.items) vals.insert(value(F, add(G0, Zg.representative(z))));
        }
        std::vector<Element> diffs;
        for (const auto& v : vals) diffs.push_back(VG.add(v, VG.negate(rep)));
        out.value_set = Coset{rep, VG.subgroup_generated_by(diffs)};
        out.enumerated = std::vector<Element>(vals.begin(), vals.end());
        return out;
    }
    std::vector<Element> gens;
    for (std::size_t i = 0; i < Y.rank(); ++i) gens.push_back(VG.class_of(as_suspended(compose(G(f2), Y.generator(i)), sA0)));
    for (std::size_t i = 0; i < Zg.rank(); ++i) gens.push_back(VG.class_of(as_suspended(compose(Zg.generator(i), G(f0)), sA0)));
    out.value_set = Coset{rep, VG.subgroup_generated_by(gens)};
    return out;
}

ChainMap extend_psi(const BracketData& data, const ChainMap& phi, const GradedMap& proof) {
    return extend_over_cofiber(data.engine->psi_split(), phi, proof);
}

ChainMap extend_psi(const BracketData& data, const GradedMap& proof) {
    if (!data.phi) throw PreconditionError("extend_psi: phi is undefined for the base choices");
    return extend_psi(data, *data.phi, proof);
}

}  // namespace toda
