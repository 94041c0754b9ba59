#include <sstream>

#include "toda/diagram.hpp"
#include "toda/smith.hpp"

namespace toda {

namespace {

bool split_epi(const ChainMap& p) {
    const auto& Y = *p.source();
    if (Y.is_zero()) return true;
    for (int n = Y.min_degree(); n <= Y.max_degree(); ++n) {
        Matrix m = p.at(n);
        auto inv = invariant_factors(p.ring(), m);
        if (inv.size() != m.rows()) return false;
        for (Scalar x : inv)
            if (x != 1) return false;
    }
    return true;
}

std::string triple_name(const CubeIndex& a, const CubeIndex& b, const CubeIndex& c, std::size_t axis) {
    return "triple axis " + std::to_string(axis + 1) + " (" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

}  // namespace

CubeDiagram extend_cube(const CubeDiagram& hat) {
    if (hat.alphabet() != Alphabet::Binary) throw InvalidInput("extend_cube: binary cube required");
    const std::size_t n = hat.dimension();
    for (const auto& [key, f] : hat.edges())
        if (!is_cofibration(f))
            throw PreconditionError("extend_cube: edge " + key.first.str() + "->" +
                                    key.first.with(key.second, 1).str() + " is not a cofibration");
    CubeDiagram E(n, Alphabet::Ternary);
    std::map<CubeIndex, Quotient> qs;
    auto base_of = [&](const CubeIndex& J) {
        auto d = J.digits();
        for (auto& x : d)
            if (x == 2) x = 1;
        return CubeIndex(d, Alphabet::Binary);
    };
    for (const auto& J : all_indices(n, Alphabet::Ternary)) {
        auto Jb = base_of(J);
        const auto& Y = hat.vertex(Jb);
        std::vector<ChainMap> gens;
        for (std::size_t k = 0; k < n; ++k)
            if (J[k] == 2) gens.push_back(hat.edge(Jb.with(k, 0), k));
        if (gens.empty()) {
            qs.emplace(J, Quotient{Y, ChainMap::identity(Y), ChainMap::identity(Y)});
        } else {
            try {
                qs.emplace(J, quotient(Y, gens));
            } catch (const PreconditionError&) {
                throw PreconditionError("extend_cube: vertex " + J.str() +
                                        " is not a split quotient; the cube is not cofibrant");
            }
        }
        E.set_vertex(J, qs.at(J).complex);
    }
    for (const auto& J : all_indices(n, Alphabet::Ternary))
        for (std::size_t i = 0; i < n; ++i) {
            if (J[i] == 2) continue;
            auto K = J.with(i, J[i] + 1);
            auto Jb = base_of(J);
            ChainMap g = J[i] == 0 ? hat.edge(Jb, i) : ChainMap::identity(hat.vertex(Jb));
            E.set_edge(J, i, induced_on_quotients(qs.at(J), qs.at(K), g));
        }
    return E;
}

VerifyReport verify_extended(const CubeDiagram& E) {
    VerifyReport rep;
    const std::size_t n = E.dimension();
    const int lo = alphabet_min(E.alphabet()), hi = alphabet_max(E.alphabet());
    if (hi - lo != 2) throw InvalidInput("verify_extended: ternary or forward cube required");
    auto fail = [&](std::string msg) {
        if (rep.ok) {
            rep.ok = false;
            rep.message = std::move(msg);
        }
    };
    for (std::size_t axis = 0; axis < n && rep.ok; ++axis)
        for (const auto& J : all_indices(n, E.alphabet())) {
            if (J[axis] != lo) continue;
            auto J2 = J.with(axis, lo + 1), J3 = J.with(axis, lo + 2);
            const auto name = triple_name(J, J2, J3, axis);
            const auto& j = E.edge(J, axis);
            const auto& p = E.edge(J2, axis);
            ++rep.triples_checked;
            if (!is_cofibration(j)) {
                fail(name + ": first map is not a cofibration");
                break;
            }
            if (!compose(p, j).is_zero()) {
                fail(name + ": composite is not zero");
                break;
            }
            if (!split_epi(p)) {
                fail(name + ": second map is not a split epimorphism");
                break;
            }
            const auto &A = *E.vertex(J), &B = *E.vertex(J2), &C = *E.vertex(J3);
            int a = std::min({A.is_zero() ? 0 : A.min_degree(), B.is_zero() ? 0 : B.min_degree(),
                              C.is_zero() ? 0 : C.min_degree()});
            int b = std::max({A.max_degree(), B.max_degree(), C.max_degree()});
            bool exact = true;
            for (int d = a; d <= b; ++d)
                if (B.dim(d) != A.dim(d) + C.dim(d)) {
                    fail(name + ": not exact at degree " + std::to_string(d));
                    exact = false;
                    break;
                }
            if (!exact) break;
        }
    for (const auto& J : all_indices(n, E.alphabet())) {
        if (!rep.ok) break;
        for (std::size_t i = 0; i < n && rep.ok; ++i)
            for (std::size_t k = i + 1; k < n && rep.ok; ++k) {
                if (J[i] == hi || J[k] == hi) continue;
                ++rep.squares_checked;
                auto Ji = J.with(i, J[i] + 1), Jk = J.with(k, J[k] + 1);
                if (!(compose(E.edge(Ji, k), E.edge(J, i)) == compose(E.edge(Jk, i), E.edge(J, k))))
                    fail("square at " + J.str() + " on axes " + std::to_string(i + 1) + "," +
                         std::to_string(k + 1) + " does not commute");
            }
    }
    return rep;
}

CubeDiagram face(const CubeDiagram& E, std::size_t axis, int digit) {
    const std::size_t n = E.dimension();
    if (n < 2) throw InvalidInput("face: dimension must be at least 2");
    if (axis >= n) throw InvalidInput("face: axis out of range");
    CubeDiagram out(n - 1, E.alphabet());
    auto drop = [&](const CubeIndex& J) {
        std::vector<int> d;
        for (std::size_t i = 0; i < n; ++i)
            if (i != axis) d.push_back(J[i]);
        return CubeIndex(d, E.alphabet());
    };
    for (const auto& [J, c] : E.vertices())
        if (J[axis] == digit) out.set_vertex(drop(J), c);
    for (const auto& [key, f] : E.edges())
        if (key.first[axis] == digit && key.second != axis)
            out.set_edge(drop(key.first), key.second < axis ? key.second : key.second - 1, f);
    return out;
}

CubeDiagram middle_cube(const CubeDiagram& E) {
    if (E.dimension() < 2) throw InvalidInput("middle_cube: dimension must be at least 2");
    return face(E, 0, alphabet_min(E.alphabet()) + 1);
}

CubeDiagram relabel(const CubeDiagram& D, int shift, Alphabet alphabet) {
    CubeDiagram out(D.dimension(), alphabet);
    auto move = [&](const CubeIndex& J) {
        auto d = J.digits();
        for (auto& x : d) x += shift;
        return CubeIndex(d, alphabet);
    };
    for (const auto& [J, c] : D.vertices()) out.set_vertex(move(J), c);
    for (const auto& [key, f] : D.edges()) out.set_edge(move(key.first), key.second, f);
    return out;
}

std::string render_dot(const CubeDiagram& D) {
    std::ostringstream os;
    os << "digraph cube {\n  rankdir=LR;\n";
    for (const auto& [J, c] : D.vertices()) {
        os << "  \"" << J.str() << "\" [label=\"(" << J.str() << "): ";
        if (c->is_zero()) {
            os << "0";
        } else {
            for (int n = c->min_degree(); n <= c->max_degree(); ++n)
                os << (n == c->min_degree() ? "" : " ") << n << ":" << c->dim(n);
        }
        os << "\"];\n";
    }
    for (const auto& [key, f] : D.edges()) {
        auto to = key.first.with(key.second, key.first[key.second] + 1);
        const char* kind = is_cofibration(f) ? "cofib" : (split_epi(f) ? "epi" : "map");
        os << "  \"" << key.first.str() << "\" -> \"" << to.str() << "\" [label=\"" << kind << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace toda
