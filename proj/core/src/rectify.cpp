#include "bracket_internal.hpp"
#include "toda/smith.hpp"

namespace toda {

using namespace detail;

namespace {

const GradedMap& G(const ChainMap& f) { return f; }

CubeIndex ternary(std::vector<int> d) { return CubeIndex(std::move(d), Alphabet::Ternary); }

// E(0,...,0), E(1,0,...,0), E(2,1,0,...,0), ..., E(2,...,2,1)
CubeIndex spine_vertex(std::size_t n, std::size_t k) {
    std::vector<int> d(n, 0);
    if (k == 0) return ternary(d);
    for (std::size_t i = 0; i + 1 < k; ++i) d[i] = 2;
    d[k - 1] = 1;
    return ternary(d);
}

// Chain map Q -> D(J) through which q: Y -> D(J) factors along the split
// epimorphism p: Y -> Q, up to homotopy when q does not descend strictly.
ChainMap descend(const ChainMap& q, const ChainMap& p) {
    const auto& Y = *p.source();
    const Ring& R = Y.ring();
    GradedMap s(p.target(), p.source(), 0);
    if (!Y.is_zero())
        for (int n = Y.min_degree(); n <= Y.max_degree(); ++n) s.set(n, unit_pseudo_inverse(R, p.at(n)));
    GradedMap g = compose(G(q), s);
    if (hom_boundary(g).is_zero() && compose(g, G(p)) == G(q)) return ChainMap(std::move(g));
    return compose(q, homotopy_inverse(p).inverse);
}

std::vector<ChainMap> prefix(const std::vector<ChainMap>& maps, std::size_t count) {
    return std::vector<ChainMap>(maps.begin(), maps.begin() + std::ptrdiff_t(count));
}

struct Search {
    Search(const std::vector<ChainMap>& m, const SearchPolicy& p) : maps(m), policy(p) {}

    const std::vector<ChainMap>& maps;
    const SearchPolicy& policy;
    std::size_t nodes = 0;
    bool budget_hit = false;
    bool incomplete = false;
    std::size_t fail_stage = 0;
    std::vector<BracketResult> values;
    std::optional<StrictDiagram> result;

    bool tick() {
        if (++nodes > policy.max_nodes) budget_hit = true;
        return !budget_hit;
    }

    void record_failure(const BracketData& data, std::size_t n) {
        if (n < fail_stage) return;
        if (n > fail_stage) values.clear();
        fail_stage = n;
        if (values.size() < 4) {
            try {
                values.push_back(bracket_value(data, policy));
            } catch (const PreconditionError&) {
            }
        }
    }

    // Bracket <f_0, ..., f_n> on the given data; on a zero value extend and
    // continue with the next stage.
    bool run(const BracketData& data, std::size_t n) {
        const auto& eng = *data.engine;
        std::vector<const HomGroup*> inner;
        for (std::size_t i = 0; i + 1 < eng.steps(); ++i) inner.push_back(&eng.step_group(i));
        auto combos = product(inner, policy);
        if (!combos.complete) incomplete = true;
        const std::size_t width = inner.size();
        const std::size_t count = width == 0 ? 1 : combos.items.size() / width;
        bool found = false;
        for (std::size_t c = 0; c < count; ++c) {
            if (!tick()) return false;
            std::vector<Element> combo(combos.items.begin() + std::ptrdiff_t(c * width),
                                       combos.items.begin() + std::ptrdiff_t((c + 1) * width));
            auto phi = eng.phi_partial(combo, width);
            if (!phi) continue;
            if (eng.steps() > 0) {
                const std::size_t last = eng.steps() - 1;
                auto base = eng.step(last, *phi, eng.step_group(last).zero());
                if (!base) continue;
                auto coeffs = solve_in_group(eng.value_group(), eng.last_step_differences(), eng.value(*base));
                if (!coeffs) continue;
                phi = eng.step(last, *phi, eng.step_group(last).normalize(*coeffs));
                if (!phi) continue;
            }
            if (!eng.value_group().is_zero(eng.value(*phi))) continue;
            found = true;
            auto psis = choices_for(eng.psi_group(), policy);
            if (!psis.complete) incomplete = true;
            for (const auto& choice : psis.items) {
                if (!tick()) return false;
                auto psi = eng.psi(*phi, choice);
                if (!psi) continue;
                auto strict = strictification_from_psi(data, *psi);
                if (n + 1 == maps.size()) {
                    result = std::move(strict);
                    return true;
                }
                auto S = strictify_strict(strict.maps);
                auto next = make_bracket_data(S, prefix(maps, n + 2), strict.comparisons);
                if (run(next, n + 1)) return true;
                if (budget_hit) return false;
            }
        }
        if (!found) record_failure(data, n);
        return false;
    }
};

}  // namespace

StrictDiagram strictification_from_psi(const BracketData& data, const ChainMap& psi) {
    const auto& E = data.E;
    const std::size_t n = E.dimension();
    if (!(*psi.source() == *E.vertex(ternary(std::vector<int>(n, 2)))))
        throw InvalidInput("strictification: psi does not start at E(2,...,2)");
    StrictDiagram out;
    out.maps.push_back(E.edge(spine_vertex(n, 0), 0));
    for (std::size_t k = 1; k < n; ++k) out.maps.push_back(E.map(spine_vertex(n, k), spine_vertex(n, k + 1)));
    out.maps.push_back(compose(psi, E.edge(spine_vertex(n, n), n - 1)));
    out.comparisons.push_back(compose(data.spine_comparisons[0], data.comparison.at(vertex_Jk(n, 0))));
    for (std::size_t k = 1; k <= n; ++k) {
        auto Jb = vertex_Jk(n, k);
        const auto& q = data.comparison.at(Jb);
        auto p = E.map(Jb.with_alphabet(Alphabet::Ternary), spine_vertex(n, k));
        out.comparisons.push_back(compose(data.spine_comparisons[k], descend(q, p)));
    }
    out.comparisons.push_back(ChainMap::identity(psi.target()));
    return out;
}

VerifyReport verify_strictification(const StrictDiagram& S, const std::vector<ChainMap>& maps) {
    VerifyReport rep;
    auto fail = [&](std::string m) {
        rep.ok = false;
        rep.message = std::move(m);
        return rep;
    };
    if (S.maps.size() != maps.size() || S.comparisons.size() != maps.size() + 1)
        return fail("length mismatch");
    for (std::size_t k = 0; k + 1 < S.maps.size(); ++k) {
        ++rep.triples_checked;
        if (!compose(S.maps[k + 1], S.maps[k]).is_zero())
            return fail("composite g" + std::to_string(k + 1) + " g" + std::to_string(k) + " is not strictly zero");
    }
    for (std::size_t k = 0; k < S.comparisons.size(); ++k)
        if (!is_quasi_iso(S.comparisons[k])) return fail("comparison " + std::to_string(k) + " is not a quasi-isomorphism");
    for (std::size_t k = 0; k < maps.size(); ++k) {
        ++rep.squares_checked;
        if (!solve_homotopy(compose(S.comparisons[k + 1], S.maps[k]), compose(maps[k], S.comparisons[k])))
            return fail("g" + std::to_string(k) + " does not represent f" + std::to_string(k));
    }
    return rep;
}

RectifyResult rectify(const TodaDiagramInput& input, const SearchPolicy& policy) {
    input.validate();
    const auto& maps = input.maps;
    const std::size_t L = maps.size();
    if (L - 1 > policy.max_stage)
        throw InvalidInput("diagram length " + std::to_string(L) + " exceeds the stage cap " +
                           std::to_string(policy.max_stage));
    RectifyResult res;
    res.search_policy = policy.describe();
    if (L == 1) {
        res.success = true;
        res.strict.maps = maps;
        res.strict.comparisons = {ChainMap::identity(maps[0].source()), ChainMap::identity(maps[0].target())};
        return res;
    }
    Search search(maps, policy);
    if (L == 2) {
        auto data = make_bracket_data(strictify_strict({maps[0]}), maps);
        search.run(data, 1);
    } else {
        const auto& f0 = maps[0];
        const auto& f1 = maps[1];
        std::optional<GradedMap> F0;
        if (!input.witnesses.empty() && input.witnesses[0]) F0 = input.witnesses[0];
        if (!F0) F0 = solve_nullhomotopy(compose(f1, f0));
        HomGroup Y(f0.source(), f1.target(), 1);
        auto ys = choices_for(Y, policy);
        std::vector<GradedMap> Fs;
        for (const auto& y : ys.items) Fs.push_back(Y.is_zero(y) ? *F0 : add(*F0, Y.representative(y)));
        if (!ys.complete && Y.rank() > 0) {
            // The value is affine in F: solve for a choice hitting zero.
            auto base = make_bracket_data(strictify_length2(f0, f1, *F0), prefix(maps, 3));
            if (base.phi) {
                const auto& VG = base.engine->value_group();
                auto v0 = base.engine->value(*base.phi);
                std::vector<Element> gens;
                bool ok = true;
                for (std::size_t i = 0; i < Y.rank() && ok; ++i) {
                    auto d = make_bracket_data(strictify_length2(f0, f1, add(*F0, Y.generator(i))), prefix(maps, 3));
                    if (!d.phi) ok = false;
                    else gens.push_back(VG.add(d.engine->value(*d.phi), VG.negate(v0)));
                }
                const std::size_t nf = gens.size();
                for (const auto& g : base.engine->last_step_differences()) gens.push_back(g);
                if (ok)
                    if (auto x = solve_in_group(VG, gens, v0)) {
                        std::vector<Scalar> a(x->begin(), x->begin() + std::ptrdiff_t(nf));
                        Fs.insert(Fs.begin() + 1, add(*F0, combination(Y, a)));
                    }
            }
            search.incomplete = true;
        }
        for (const auto& F : Fs) {
            auto data = make_bracket_data(strictify_length2(f0, f1, F), prefix(maps, 3));
            if (search.run(data, 2) || search.budget_hit) break;
        }
    }
    res.nodes = search.nodes;
    if (search.result) {
        res.success = true;
        res.strict = std::move(*search.result);
        return res;
    }
    res.stage = search.fail_stage;
    res.values = std::move(search.values);
    const bool proven_at_two =
        res.stage == 2 && !res.values.empty() && !res.values.front().value_set.contains_zero();
    const bool finite_complete = is_finite_ring(maps[0].ring()) && !search.incomplete && !search.budget_hit;
    res.search_exhausted = !(proven_at_two || finite_complete);
    res.caveat = "obstruction relative to the constructed lower-stage strictification; "
                 "other weak homotopy types of the strictified segment are not searched";
    return res;
}

BracketResult higher_bracket(const std::vector<ChainMap>& maps, const SearchPolicy& policy) {
    if (maps.size() < 3) throw InvalidInput("bracket: at least three maps required");
    const std::size_t n = maps.size() - 1;
    if (n > policy.max_stage) throw InvalidInput("bracket length exceeds the stage cap");
    if (n == 2) return triple_bracket(maps[0], maps[1], maps[2], policy);
    TodaDiagramInput in{maps, {}};
    in.validate();
    auto init = rectify(TodaDiagramInput{prefix(maps, n), {}}, policy);
    if (!init.success)
        throw PreconditionError("initial segment does not strictify: obstruction at stage " + std::to_string(init.stage));
    auto data = make_bracket_data(strictify_strict(init.strict.maps), maps, init.strict.comparisons);
    return bracket_value(data, policy);
}

}  // namespace toda
