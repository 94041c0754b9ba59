#include "toda/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "toda/smith.hpp"

namespace toda {

namespace {

std::string edge_name(const CubeIndex& from, std::size_t axis) {
    return from.str() + "->" + from.with(axis, from[axis] + 1).str();
}

}  // namespace

// ---- CubeDiagram ----

void CubeDiagram::set_vertex(const CubeIndex& j, ComplexPtr c) {
    if (j.size() != n_ || j.alphabet() != alphabet_) throw InvalidInput("vertex index does not fit the cube");
    vertices_[j] = std::move(c);
}

void CubeDiagram::set_edge(const CubeIndex& from, std::size_t axis, ChainMap f) {
    if (from.size() != n_ || from.alphabet() != alphabet_ || axis >= n_ ||
        from[axis] >= alphabet_max(alphabet_))
        throw InvalidInput("edge does not fit the cube");
    auto it = edges_.find({from, axis});
    if (it != edges_.end()) {
        it->second = std::move(f);
    } else {
        edges_.emplace(std::make_pair(from, axis), std::move(f));
    }
}

const ComplexPtr& CubeDiagram::vertex(const CubeIndex& j) const {
    auto it = vertices_.find(j);
    if (it == vertices_.end()) throw InvalidInput("diagram has no vertex " + j.str());
    return it->second;
}

const ChainMap& CubeDiagram::edge(const CubeIndex& from, std::size_t axis) const {
    auto it = edges_.find({from, axis});
    if (it == edges_.end()) throw InvalidInput("diagram has no edge " + edge_name(from, axis));
    return it->second;
}

ChainMap CubeDiagram::map(const CubeIndex& a, const CubeIndex& b) const {
    if (!poset_leq(a, b)) throw InvalidInput("map: " + a.str() + " is not below " + b.str());
    ChainMap out = ChainMap::identity(vertex(a));
    CubeIndex cur = a;
    for (std::size_t i = 0; i < n_; ++i)
        while (cur[i] < b[i]) {
            out = compose(edge(cur, i), out);
            cur = cur.with(i, cur[i] + 1);
        }
    return out;
}

std::vector<CubeIndex> CubeDiagram::indices() const {
    std::vector<CubeIndex> out;
    for (const auto& [j, c] : vertices_) out.push_back(j);
    return out;
}

std::size_t CubeDiagram::total_rank() const {
    std::size_t s = 0;
    for (const auto& [j, c] : vertices_) s += c->total_rank();
    return s;
}

// ---- cofibrant replacement ----

CofibrantReplacement cofibrant_replacement(const CubeDiagram& D, const LatchingOverride& override) {
    if (D.alphabet() != Alphabet::Binary) throw InvalidInput("cofibrant_replacement: binary cube required");
    const std::size_t n = D.dimension();
    auto order = all_indices(n, Alphabet::Binary);
    std::stable_sort(order.begin(), order.end(), [](const CubeIndex& a, const CubeIndex& b) {
        return filtration_level(a) < filtration_level(b);
    });
    CofibrantReplacement out{CubeDiagram(n, Alphabet::Binary), {}};
    auto& hat = out.hat;
    for (const auto& J : order) {
        if (filtration_level(J) == 0) {
            hat.set_vertex(J, D.vertex(J));
            out.comparison.emplace(J, ChainMap::identity(D.vertex(J)));
            continue;
        }
        std::vector<CubeIndex> preds;
        for (const auto& K : order)
            if (!(K == J) && poset_leq(K, J)) preds.push_back(K);
        std::vector<ComplexPtr> parts;
        for (const auto& K : preds) parts.push_back(hat.vertex(K));
        auto S = direct_sum(parts);
        auto pos = [&](const CubeIndex& K) {
            return std::size_t(std::find(preds.begin(), preds.end(), K) - preds.begin());
        };
        std::vector<ChainMap> rels;
        for (const auto& K : preds)
            for (std::size_t i = 0; i < n; ++i) {
                if (K[i] != 0 || J[i] != 1) continue;
                auto up = K.with(i, 1);
                if (up == J) continue;
                rels.push_back(subtract(compose(S.inclusions[pos(up)], hat.edge(K, i)),
                                        S.inclusions[pos(K)]));
            }
        auto L = quotient(S.sum, rels);
        // lambda: L -> D(J), assembled on the sum and restricted along the section
        GradedMap on_sum(S.sum, D.vertex(J), 0);
        for (std::size_t t = 0; t < preds.size(); ++t) {
            const auto& K = preds[t];
            std::optional<ChainMap> piece;
            if (override) piece = override(J, K, hat.vertex(K));
            if (!piece) piece = compose(D.map(K, J), out.comparison.at(K));
            on_sum = add(on_sum, compose(static_cast<const GradedMap&>(*piece),
                                         static_cast<const GradedMap&>(S.projections[t])));
        }
        ChainMap lambda(compose(on_sum, L.section));
        auto cyl = cylinder_factorization(lambda);
        hat.set_vertex(J, cyl.complex);
        out.comparison.emplace(J, cyl.retraction);
        for (std::size_t i = 0; i < n; ++i)
            if (J[i] == 1) {
                auto K = J.with(i, 0);
                hat.set_edge(K, i, compose(cyl.inclusion, compose(L.projection, S.inclusions[pos(K)])));
            }
    }
    return out;
}

// ---- strictifications ----

EnhancedStrictification strictify_length2(const ChainMap& f0, const ChainMap& f1, const GradedMap& F) {
    if (!(*f0.target() == *f1.source())) throw InvalidInput("strictify_length2: f0 and f1 do not compose");
    const auto& A0 = f0.source();
    const auto& A2 = f1.target();
    const Ring& R = f0.ring();
    ChainMap f1f0 = compose(f1, f0);
    if (!is_homotopy(f1f0, ChainMap::zero(A0, A2), F))
        throw PreconditionError("strictify_length2: F is not a nullhomotopy of f1 f0");
    auto Z = zero_complex(R);
    CubeDiagram D(2, Alphabet::Binary);
    auto idx = [](const char* s) { return CubeIndex::parse(s, Alphabet::Binary); };
    D.set_vertex(idx("00"), A0);
    D.set_vertex(idx("10"), f0.target());
    D.set_vertex(idx("01"), Z);
    D.set_vertex(idx("11"), A2);
    D.set_edge(idx("00"), 0, f0);
    D.set_edge(idx("00"), 1, ChainMap::zero(A0, Z));
    D.set_edge(idx("10"), 1, f1);
    D.set_edge(idx("01"), 0, ChainMap::zero(Z, A2));
    // On the cone vertex (x, a) |-> f1 f0 x + F a.
    LatchingOverride ov = [&](const CubeIndex& J, const CubeIndex& K,
                              const ComplexPtr& hat) -> std::optional<ChainMap> {
        if (!(J == idx("11")) || !(K == idx("01"))) return std::nullopt;
        GradedMap g(hat, A2, 0);
        if (!hat->is_zero())
            for (int n = hat->min_degree(); n <= hat->max_degree(); ++n)
                g.set(n, hstack({f1f0.at(n), F.at(n - 1)}, A2->dim(n)));
        return ChainMap(std::move(g));
    };
    auto rep = cofibrant_replacement(D, ov);
    EnhancedStrictification out{std::move(rep.hat), std::move(rep.comparison),
                                {A0, f0.target(), A2}, {f0, f1}, F};
    return out;
}

EnhancedStrictification strictify_strict(const std::vector<ChainMap>& maps) {
    if (maps.empty()) throw InvalidInput("strictify_strict: no maps");
    const std::size_t n = maps.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!(*maps[k].target() == *maps[k + 1].source()))
            throw InvalidInput("strictify_strict: maps " + std::to_string(k) + " and " +
                               std::to_string(k + 1) + " do not compose");
        if (!compose(maps[k + 1], maps[k]).is_zero())
            throw PreconditionError("strictify_strict: composite f" + std::to_string(k + 1) + " f" +
                                    std::to_string(k) + " is not strictly zero");
    }
    std::vector<ComplexPtr> objects{maps[0].source()};
    for (const auto& f : maps) objects.push_back(f.target());
    auto Z = zero_complex(maps[0].ring());
    CubeDiagram D(n, Alphabet::Binary);
    auto spine_level = [&](const CubeIndex& J) -> std::optional<std::size_t> {
        std::size_t k = 0;
        while (k < n && J[k] == 1) ++k;
        for (std::size_t i = k; i < n; ++i)
            if (J[i] != 0) return std::nullopt;
        return k;
    };
    for (const auto& J : all_indices(n, Alphabet::Binary)) {
        auto k = spine_level(J);
        D.set_vertex(J, k ? objects[*k] : Z);
    }
    for (const auto& J : all_indices(n, Alphabet::Binary))
        for (std::size_t i = 0; i < n; ++i) {
            if (J[i] != 0) continue;
            auto K = J.with(i, 1);
            auto a = spine_level(J), b = spine_level(K);
            if (a && b) {
                D.set_edge(J, i, maps[*a]);
            } else {
                D.set_edge(J, i, ChainMap::zero(D.vertex(J), D.vertex(K)));
            }
        }
    auto rep = cofibrant_replacement(D);
    return EnhancedStrictification{std::move(rep.hat), std::move(rep.comparison), objects, maps,
                                   std::nullopt};
}

}  // namespace toda
