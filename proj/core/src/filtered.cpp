#include "toda/filtered.hpp"

#include <algorithm>
#include <sstream>

#include "bracket_internal.hpp"
#include "toda/hom.hpp"

namespace toda {

namespace {

const GradedMap& G(const ChainMap& f) { return f; }

CubeIndex shifted(const CubeIndex& J, int shift, Alphabet a) {
    auto d = J.digits();
    for (auto& x : d) x += shift;
    return CubeIndex(std::move(d), a);
}

std::optional<int> lowest_homology(const ChainComplex& C) {
    auto h = homology_signature(C);
    if (h.empty()) return std::nullopt;
    return h.begin()->first;
}

bool has_zero_differential(const ChainComplex& C) {
    if (C.is_zero()) return true;
    for (int n = C.min_degree() + 1; n <= C.max_degree(); ++n)
        if (!C.d(n).is_zero()) return false;
    return true;
}

// cone(g) -> Y, (x, b) |-> j x + sign H b for j g = dH + Hd.
std::optional<ChainMap> cone_map(const Cone& c, const ChainMap& j, const ChainMap& g, const GradedMap& H) {
    const auto& Y = j.target();
    const auto& X = j.source();
    const auto& B = g.source();
    for (Scalar sign : {1, -1}) {
        GradedMap u(c.complex, Y, 0);
        if (!c.complex->is_zero())
            for (int n = c.complex->min_degree(); n <= c.complex->max_degree(); ++n) {
                Matrix top = j.at(n);
                if (top.cols() != X->dim(n)) top = Matrix(Y->dim(n), X->dim(n));
                Matrix h = scale(Y->ring(), sign, H.at(n - 1));
                if (h.cols() != B->dim(n - 1)) h = Matrix(Y->dim(n), B->dim(n - 1));
                u.set(n, hstack({top, h}, Y->dim(n)));
            }
        if (hom_boundary(u).is_zero()) return ChainMap(std::move(u));
    }
    return std::nullopt;
}

// A quasi-isomorphism cone(g) -> Y among the nullhomotopies of j g offered
// by the default search policy.
std::optional<ChainMap> cone_comparison(const Cone& c, const ChainMap& j, const ChainMap& g, const GradedMap& H0) {
    HomGroup grp(g.source(), j.target(), 1);
    for (const auto& x : detail::choices_for(grp, SearchPolicy{}).items) {
        GradedMap H = grp.is_zero(x) ? H0 : add(H0, grp.representative(x));
        auto u = cone_map(c, j, g, H);
        if (u && is_quasi_iso(*u)) return u;
    }
    return std::nullopt;
}

}  // namespace

// ---- forward cubes ----

ForwardDiagram forward_diagram(const CubeDiagram& E) {
    if (E.alphabet() != Alphabet::Ternary) throw InvalidInput("forward: ternary cube required");
    auto rep = verify_extended(E);
    if (!rep.ok) throw PreconditionError("forward: " + rep.message);
    const std::size_t n = E.dimension();
    CubeDiagram D(n, Alphabet::Binary);
    for (const auto& J : all_indices(n, Alphabet::Binary)) {
        auto T = shifted(J, 1, Alphabet::Ternary);
        D.set_vertex(J, E.vertex(T));
    }
    for (const auto& J : all_indices(n, Alphabet::Binary))
        for (std::size_t i = 0; i < n; ++i)
            if (J[i] == 0) D.set_edge(J, i, E.edge(shifted(J, 1, Alphabet::Ternary), i));
    auto cof = cofibrant_replacement(D);
    ForwardDiagram out{relabel(extend_cube(cof.hat), 1, Alphabet::Forward), {}};
    for (const auto& [J, q] : cof.comparison) out.comparison.emplace(shifted(J, 1, Alphabet::Forward), q);
    return out;
}

ChainMap forward_suspension_witness(const ForwardDiagram& fd, const CubeDiagram& E, const CubeIndex& J) {
    const std::size_t n = J.size();
    std::size_t axis = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (J[i] == 3) {
            if (axis != n) throw InvalidInput("forward witness: more than one digit 3 in " + J.str());
            axis = i;
        }
    }
    if (axis == n) throw InvalidInput("forward witness: no digit 3 in " + J.str());
    const auto& F = fd.F;
    auto K1 = J.with(axis, 1), K2 = J.with(axis, 2);
    auto hs = split_pair(F.edge(K1, axis), F.edge(K2, axis));
    auto T = K1.with_alphabet(Alphabet::Ternary);
    auto E0 = T.with(axis, 0), E1 = T, E2 = T.with(axis, 2);
    auto es = split_pair(E.edge(E0, axis), E.edge(E1, axis));
    const auto& q1 = fd.comparison.at(K1);
    const auto& q2 = fd.comparison.at(K2);
    // (delta_E q2 s_h) - S(r_E q1) delta_h
    auto first = compose(G(es.connecting()), compose(G(q2), hs.section));
    auto rq = compose(es.retraction, G(q1));
    auto second =
        compose(suspension(rq, suspension(q1.source()), suspension(E.vertex(E0))), G(hs.connecting()));
    auto w = subtract(first, second);
    if (!hom_boundary(w).is_zero()) throw PreconditionError("forward witness at " + J.str() + " is not a chain map");
    return ChainMap(std::move(w));
}

VerifyReport verify_forward(const ForwardDiagram& fd, const CubeDiagram& E) {
    auto rep = verify_extended(relabel(fd.F, -1, Alphabet::Ternary));
    if (!rep.ok) return rep;
    for (const auto& J : all_indices(fd.F.dimension(), Alphabet::Forward)) {
        if (std::count(J.digits().begin(), J.digits().end(), 3) != 1) continue;
        if (!is_quasi_iso(forward_suspension_witness(fd, E, J))) {
            rep.ok = false;
            rep.message = "F(" + J.str() + ") is not equivalent to the suspended back face";
            return rep;
        }
    }
    return rep;
}

// ---- filtered objects ----

ChainMap FilteredObject::inclusion_of_bottom() const {
    ChainMap out = ChainMap::identity(stages.front());
    for (const auto& j : inclusions) out = compose(j, out);
    return out;
}

FilteredObject make_filtered_object(ComplexPtr X0, std::vector<ChainMap> inclusions,
                                    std::vector<std::optional<ChainMap>> attaching) {
    FilteredObject X;
    X.stages.push_back(X0);
    for (std::size_t k = 0; k < inclusions.size(); ++k) {
        if (!(*inclusions[k].source() == *X.stages.back()))
            throw InvalidInput("inclusions[" + std::to_string(k) + "] does not start at stage " + std::to_string(k));
        X.stages.push_back(inclusions[k].target());
    }
    if (!attaching.empty() && attaching.size() != inclusions.size())
        throw InvalidInput("attaching: expected one entry per inclusion");
    X.inclusions = std::move(inclusions);
    X.attaching = std::move(attaching);
    X.attaching.resize(X.inclusions.size());
    X.quotients.push_back(X0);
    X.projections.push_back(ChainMap::identity(X0));
    X.sections.push_back(ChainMap::identity(X0));
    for (std::size_t k = 0; k < X.inclusions.size(); ++k) {
        const auto& j = X.inclusions[k];
        const std::string name = "inclusion j" + std::to_string(k);
        if (!is_cofibration(j)) throw PreconditionError(name + " is not a cofibration");
        auto sc = split_cofiber(j);
        X.quotients.push_back(sc.quotient);
        X.projections.push_back(sc.projection);
        X.sections.push_back(sc.section);
        X.connecting.push_back(sc.connecting());
        if (!X.attaching[k]) continue;
        const auto& g = *X.attaching[k];
        const std::string gname = "attaching map g" + std::to_string(k);
        if (!(*g.target() == *j.source())) throw InvalidInput(gname + " does not end at stage " + std::to_string(k));
        auto H = solve_nullhomotopy(compose(j, g));
        if (!H) throw PreconditionError(gname + ": j" + std::to_string(k) + " g" + std::to_string(k) + " is not nullhomotopic");
        auto c = cone(g);
        auto u = cone_comparison(c, j, g, *H);
        if (!u) throw PreconditionError(gname + ": its cone is not equivalent to the next stage");
        auto via = compose(X.connecting.back(), compose(sc.projection, *u));
        auto expect = compose(suspension(g), c.projection);
        if (!solve_homotopy(via, expect) && !solve_homotopy(via, scale(-1, expect)))
            throw PreconditionError(gname + ": connecting map is not its suspension");
        X.attaching_witness.push_back(*u);
    }
    return X;
}

FilteredObject filtered_from_forward(const ForwardDiagram& fd) {
    const auto& F = fd.F;
    const std::size_t n = F.dimension();
    std::vector<ChainMap> inc;
    for (std::size_t k = 1; k < n; ++k) inc.push_back(F.edge(forward_Jk(n, k), n - k));
    return make_filtered_object(F.vertex(forward_Jk(n, 1)), std::move(inc));
}

std::vector<ChainMap> gamma_maps(const FilteredObject& X) {
    std::vector<ChainMap> out;
    for (std::size_t k = 0; k < X.connecting.size(); ++k)
        out.push_back(compose(suspension(X.projections[k]), X.connecting[k]));
    return out;
}

TodaDiagramInput to_toda_diagram(const FilteredObject& X, const ChainMap& alpha, const ChainMap& phi) {
    const std::size_t l = X.length();
    if (!(*alpha.target() == *X.top())) throw InvalidInput("alpha does not end at the filtered object");
    if (!(*phi.source() == *X.top())) throw InvalidInput("phi does not start at the filtered object");
    auto gammas = gamma_maps(X);
    TodaDiagramInput out;
    out.maps.push_back(compose(X.projections[l], alpha));
    for (std::size_t k = l; k >= 1; --k) out.maps.push_back(suspension(gammas[k - 1], int(l - k)));
    out.maps.push_back(suspension(compose(phi, X.inclusion_of_bottom()), int(l)));
    for (std::size_t k = 0; k + 1 < out.maps.size(); ++k) {
        auto H = solve_nullhomotopy(compose(out.maps[k + 1], out.maps[k]));
        if (!H)
            throw PreconditionError("filtered: composite m" + std::to_string(k + 1) + " m" + std::to_string(k) +
                                    " is not nullhomotopic");
        out.witnesses.push_back(std::move(*H));
    }
    return out;
}

GeneralizedBracket generalized_bracket(const FilteredObject& X, const ChainMap& alpha, const ChainMap& phi,
                                       const std::optional<ChainMap>& first, const std::optional<ChainMap>& last) {
    if (!(*alpha.target() == *X.top())) throw InvalidInput("alpha does not end at the filtered object");
    if (!(*phi.source() == *X.top())) throw InvalidInput("phi does not start at the filtered object");
    if (first) {
        auto ra = compose(X.projections.back(), alpha);
        if (!(*first->source() == *ra.source()) || !(*first->target() == *ra.target()) || !solve_homotopy(*first, ra))
            throw InvalidInput("alpha does not lift the given first map");
    }
    if (last) {
        auto pj = compose(phi, X.inclusion_of_bottom());
        if (!(*last->source() == *pj.source()) || !(*last->target() == *pj.target()) || !solve_homotopy(*last, pj))
            throw InvalidInput("phi does not extend the given last map");
    }
    HomGroup grp(alpha.source(), phi.target(), 0);
    GeneralizedBracket out;
    out.value = grp.class_of(compose(G(phi), G(alpha)));
    out.group_orders = grp.orders();
    out.is_zero = grp.is_zero(out.value);
    return out;
}

// ---- spherical filtrations ----

SphericalProfile SphericalProfile::parse(const std::string& text) {
    SphericalProfile p;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        auto b = field.find_first_not_of(" \t");
        auto e = field.find_last_not_of(" \t");
        field = b == std::string::npos ? "" : field.substr(b, e - b + 1);
        if (field.empty() || field == "inf") {
            p.c.push_back(std::nullopt);
            continue;
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != field.size() || used == 0) throw InvalidInput("profile: '" + field + "' is not an integer");
        p.c.push_back(v);
    }
    if (!text.empty() && text.back() == ',') p.c.push_back(std::nullopt);
    if (p.c.size() < 3) throw InvalidInput("profile: need at least three entries (c_-1, c_0, c_1)");
    return p;
}

std::string SphericalProfile::str() const {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i] ? std::to_string(*c[i]) : "inf";
    }
    return out;
}

SphericalReport spherical_check(const SphericalProfile& p) {
    SphericalReport rep;
    const auto& c = p.c;
    auto name = [](std::size_t i) { return "c_" + std::to_string(int(i) - 1); };
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!c[i] || !c[i + 1] || *c[i] + 1 != *c[i + 1]) continue;
        if (i > 0 && c[i - 1] && !(*c[i - 1] + 1 < *c[i])) {
            rep.spherical = false;
            rep.message = name(i) + " + 1 = " + name(i + 1) + " but " + name(i - 1) + " + 1 >= " + name(i);
            return rep;
        }
        if (i + 2 < c.size() && c[i + 2] && !(*c[i + 1] + 1 < *c[i + 2])) {
            rep.spherical = false;
            rep.message = name(i) + " + 1 = " + name(i + 1) + " but " + name(i + 1) + " + 1 >= " + name(i + 2);
            return rep;
        }
    }
    return rep;
}

SphericalProfile profile(const FilteredObject& X, const ComplexPtr& W, const ComplexPtr& Z) {
    SphericalProfile p;
    p.c.push_back(lowest_homology(*Z));
    for (const auto& C : X.quotients) p.c.push_back(lowest_homology(*C));
    p.c.push_back(lowest_homology(*W));
    return p;
}

TrivialityReport sphere_wedge_triviality_check(const FilteredObject& X) {
    for (std::size_t k = 0; k < X.quotients.size(); ++k)
        if (!has_zero_differential(*X.quotients[k]))
            throw PreconditionError("sphere wedge check: quotient C" + std::to_string(k) + " has a nonzero differential");
    TrivialityReport rep;
    auto gammas = gamma_maps(X);
    for (std::size_t i = 0; i + 1 < gammas.size(); ++i) {
        ++rep.pairs_checked;
        // Each entry of the composite is a sum of products a_i b_i over the
        // summands of the middle quotient.
        if (!compose(suspension(gammas[i]), gammas[i + 1]).is_zero()) {
            rep.trivial = false;
            rep.message = "gamma" + std::to_string(i + 1) + " gamma" + std::to_string(i + 2) + " is not zero";
            return rep;
        }
    }
    return rep;
}

}  // namespace toda
