#include <doctest.h>

#include "toda/diagram.hpp"
#include "toda/hom.hpp"
#include "toda/random.hpp"
#include "toda/symbolic.hpp"

using namespace toda;

namespace {

const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);

CubeIndex bin(const char* s) { return CubeIndex::parse(s, Alphabet::Binary); }
CubeIndex ter(const char* s) { return CubeIndex::parse(s, Alphabet::Ternary); }

std::map<int, HomologyGroup> shifted(const std::map<int, HomologyGroup>& h, std::size_t r) {
    std::map<int, HomologyGroup> out;
    for (auto [n, g] : h) {
        g.degree = n + int(r);
        out.emplace(g.degree, g);
    }
    return out;
}

// Cone(j) -> C, (b, a) |-> p b. A quasi-isomorphism exactly when the long
// exact homology sequence of A -> B -> C is exact.
bool cone_comparison_is_qi(const ChainMap& j, const ChainMap& p) {
    auto c = cone(j);
    const auto& C = p.target();
    const auto& A = j.source();
    GradedMap g(c.complex, C, 0);
    if (!c.complex->is_zero())
        for (int n = c.complex->min_degree(); n <= c.complex->max_degree(); ++n)
            g.set(n, hstack({p.at(n), Matrix(C->dim(n), A->dim(n - 1))}, C->dim(n)));
    return is_quasi_iso(ChainMap(g));
}

// Homology predictions read off the index alone.
void check_classifier(const CubeDiagram& E, const std::vector<ComplexPtr>& objects) {
    for (const auto& [J, X] : E.vertices()) {
        auto t = classify_vertex(J);
        if (std::holds_alternative<Contractible>(t)) {
            CHECK_MESSAGE(is_acyclic(*X), J.str());
        } else if (auto s = std::get_if<Suspension>(&t)) {
            CHECK_MESSAGE(homology_signature(*X) == shifted(homology_signature(*objects.at(s->k)), s->r), J.str());
        }
    }
}

void check_rows_exact(const CubeDiagram& E) {
    for (const auto& tr : cofibration_triples(E.dimension())) {
        const auto& j = E.edge(tr.first, tr.axis);
        const auto& p = E.edge(tr.middle, tr.axis);
        CHECK_MESSAGE(cone_comparison_is_qi(j, p), tr.first.str());
    }
}

CubeDiagram binary_face(const CubeDiagram& E) {
    CubeDiagram B(E.dimension(), Alphabet::Binary);
    for (const auto& [J, X] : E.vertices()) {
        bool ok = true;
        for (int d : J.digits()) ok = ok && d <= 1;
        if (ok) B.set_vertex(J.with_alphabet(Alphabet::Binary), X);
    }
    for (const auto& [key, f] : E.edges()) {
        bool ok = key.first[key.second] == 0;
        for (int d : key.first.digits()) ok = ok && d <= 1;
        if (ok) B.set_edge(key.first.with_alphabet(Alphabet::Binary), key.second, f);
    }
    return B;
}

EnhancedStrictification random_length2(const Ring& R, Rng& rng) {
    auto maps = random_toda_diagram(R, rng, 2, {0, 2, 2, false});
    auto F = solve_nullhomotopy(compose(maps[1], maps[0]));
    REQUIRE(F);
    return strictify_length2(maps[0], maps[1], *F);
}

// A0 -> X (+) Y -> Y (+) W -> A3 with strictly zero composites.
std::vector<ChainMap> strict_spine(const Ring& R, Rng& rng) {
    RandomShape sh{0, 2, 1, false};
    auto A0 = random_complex(R, rng, sh), X = random_complex(R, rng, sh), Y = random_complex(R, rng, sh);
    auto W = random_complex(R, rng, sh), A3 = random_complex(R, rng, sh);
    auto XY = direct_sum({X, Y}), YW = direct_sum({Y, W});
    auto f0 = compose(XY.inclusions[0], random_chain_map(A0, X, rng));
    auto f1 = compose(YW.inclusions[0], compose(random_chain_map(Y, Y, rng), XY.projections[1]));
    auto f2 = compose(random_chain_map(W, A3, rng), YW.projections[1]);
    return {f0, f1, f2};
}

}  // namespace

TEST_CASE("cofibrant replacement of a length-2 diagram") {
    Rng rng(21);
    for (int t = 0; t < 12; ++t) {
        auto R = t % 3 == 0 ? Z : Ring::prime_field(t % 3 == 1 ? 2 : 3);
        auto S = random_length2(R, rng);
        for (const auto& [key, f] : S.hat.edges()) CHECK(is_cofibration(f));
        for (const auto& [J, q] : S.comparison) CHECK(is_quasi_iso(q));
        CHECK(is_quasi_iso(S.comparison.at(bin("00"))));
        CHECK(is_acyclic(*S.hat.vertex(bin("01"))));
        // the spine composite factors through the acyclic off-spine vertex
        CHECK(S.hat.map(bin("00"), bin("11")) ==
              compose(S.hat.edge(bin("01"), 0), S.hat.edge(bin("00"), 1)));
        // comparisons commute with the spine maps
        CHECK(compose(S.comparison.at(bin("10")), S.hat.edge(bin("00"), 0)) ==
              compose(S.maps[0], S.comparison.at(bin("00"))));
        CHECK(compose(S.comparison.at(bin("11")), S.hat.edge(bin("10"), 1)) ==
              compose(S.maps[1], S.comparison.at(bin("10"))));
    }
}

TEST_CASE("nullhomotopy must be valid") {
    auto P = make_complex(ChainComplex::concentrated(F2, 0, 1));
    auto id = ChainMap::identity(P);
    GradedMap F(P, P, 1);
    CHECK_THROWS_AS(strictify_length2(id, id, F), PreconditionError);
}

TEST_CASE("extension of length-2 strictifications") {
    Rng rng(22);
    for (int t = 0; t < 12; ++t) {
        auto R = t % 3 == 0 ? Z : Ring::prime_field(t % 3 == 1 ? 2 : 5);
        auto S = random_length2(R, rng);
        auto E = extend_cube(S.hat);
        CHECK(E.vertices().size() == 9);
        auto rep = verify_extended(E);
        CHECK_MESSAGE(rep.ok, rep.message);
        CHECK(rep.triples_checked == 6);
        CHECK(rep.squares_checked == 4);
        check_classifier(E, S.objects);
        check_rows_exact(E);
        CHECK(homology_signature(*E.vertex(ter("02"))) == homology_signature(*suspension(S.objects[0])));
        auto mid = middle_cube(E);
        CHECK(mid.dimension() == 1);
        CHECK(mid.vertex(ter("1")) == E.vertex(ter("11")));
        CHECK(verify_extended(mid).ok);
        // extending the binary face again reproduces E
        auto again = extend_cube(binary_face(E));
        for (const auto& [J, X] : E.vertices()) CHECK(*again.vertex(J) == *X);
        for (const auto& [key, f] : E.edges()) CHECK(again.edge(key.first, key.second) == f);
        for (const auto& [key, f] : E.edges())
            if (key.first[key.second] == 0) CHECK(is_cofibration(f));
    }
}

TEST_CASE("trivial length-2 instances") {
    auto P = make_complex(ChainComplex::concentrated(F2, 0, 1));
    auto id = ChainMap::identity(P), zero = ChainMap::zero(P, P);
    auto S = strictify_length2(id, zero, GradedMap(P, P, 1));
    auto E = extend_cube(S.hat);
    CHECK(verify_extended(E).ok);
    CHECK(is_acyclic(*E.vertex(ter("20"))));
    auto S0 = strictify_length2(zero, zero, GradedMap(P, P, 1));
    auto E0 = extend_cube(S0.hat);
    CHECK(verify_extended(E0).ok);
    // cofiber of the zero map: A1 (+) sA0
    auto h = homology_signature(*E0.vertex(ter("20")));
    CHECK(h.at(0).free_rank == 1);
    CHECK(h.at(1).free_rank == 1);
}

TEST_CASE("one-dimensional extension") {
    auto A = make_complex(ChainComplex::concentrated(Z, 0, 1));
    auto cyl = cylinder_factorization(scale(2, ChainMap::identity(A)));
    CubeDiagram D(1, Alphabet::Binary);
    D.set_vertex(bin("0"), A);
    D.set_vertex(bin("1"), cyl.complex);
    D.set_edge(bin("0"), 0, cyl.inclusion);
    auto E = extend_cube(D);
    CHECK(E.vertices().size() == 3);
    auto h = homology_signature(*E.vertex(ter("2")));
    REQUIRE(h.size() == 1);
    CHECK(h.at(0).torsion == std::vector<Scalar>{2});
    CHECK(verify_extended(E).ok);
    D.set_edge(bin("0"), 0, scale(2, ChainMap::identity(A)));
    D.set_vertex(bin("1"), A);
    try {
        extend_cube(D);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("0->1") != std::string::npos);
    }
}

TEST_CASE("fault injection is reported") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        auto S = random_length2(Z, rng);
        auto E = extend_cube(S.hat);
        const auto& e = E.edge(ter("01"), 0);
        auto bad = scale(-1, e);
        if (compose(bad, E.edge(ter("00"), 1)) == compose(e, E.edge(ter("00"), 1))) continue;
        E.set_edge(ter("01"), 0, bad);
        auto rep = verify_extended(E);
        CHECK_FALSE(rep.ok);
        CHECK(rep.message.find("00") != std::string::npos);
        return;
    }
    FAIL("no instance with a nonzero square");
}

TEST_CASE("zero composite fault names the triple") {
    auto A = make_complex(ChainComplex::concentrated(Z, 0, 1));
    CubeDiagram E(1, Alphabet::Ternary);
    E.set_vertex(ter("0"), A);
    E.set_vertex(ter("1"), A);
    E.set_vertex(ter("2"), A);
    E.set_edge(ter("0"), 0, ChainMap::identity(A));
    E.set_edge(ter("1"), 0, ChainMap::identity(A));
    auto rep = verify_extended(E);
    CHECK_FALSE(rep.ok);
    CHECK(rep.message.find("(0, 1, 2)") != std::string::npos);
}

TEST_CASE("three-dimensional extension") {
    Rng rng(24);
    for (int t = 0; t < 4; ++t) {
        auto R = t % 2 ? Z : F2;
        auto S = strictify_strict(strict_spine(R, rng));
        for (const auto& [J, q] : S.comparison) CHECK(is_quasi_iso(q));
        auto E = extend_cube(S.hat);
        CHECK(E.vertices().size() == 27);
        auto rep = verify_extended(E);
        CHECK_MESSAGE(rep.ok, rep.message);
        CHECK(rep.triples_checked == 27);
        check_classifier(E, S.objects);
        CHECK(homology_signature(*E.vertex(ter("022"))) ==
              homology_signature(*suspension(S.objects[0], 2)));
        auto mid = middle_cube(E);
        CHECK(verify_extended(mid).ok);
        auto line = middle_cube(mid);
        for (int d = 0; d < 3; ++d) {
            auto J = CubeIndex({1, 1, d}, Alphabet::Ternary);
            CHECK(line.vertex(CubeIndex({d}, Alphabet::Ternary)) == E.vertex(J));
        }
    }
    CHECK_THROWS_AS(middle_cube(CubeDiagram(1, Alphabet::Ternary)), InvalidInput);
}

TEST_CASE("strict spine must compose to zero") {
    auto P = make_complex(ChainComplex::concentrated(F2, 0, 1));
    auto id = ChainMap::identity(P);
    CHECK_THROWS_AS(strictify_strict({id, id}), PreconditionError);
}

TEST_CASE("dot rendering") {
    Rng rng(25);
    auto E = extend_cube(random_length2(F2, rng).hat);
    auto a = render_dot(E), b = render_dot(E);
    CHECK(a == b);
    CHECK(a.rfind("digraph", 0) == 0);
    CHECK(a.find("\"00\" -> \"10\" [label=\"cofib\"]") != std::string::npos);
    CHECK(a.find("\"10\" -> \"20\" [label=\"epi\"]") != std::string::npos);
    CHECK(a.find("(22): ") != std::string::npos);
}
