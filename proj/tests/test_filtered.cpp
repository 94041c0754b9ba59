#include <doctest.h>

#include "instances.hpp"
#include "toda/filtered.hpp"
#include "toda/random.hpp"
#include "toda/smith.hpp"
#include "toda/symbolic.hpp"

using namespace toda;
using namespace toda::testing;

namespace {

const Ring Z = Ring::integers();
const Ring F2 = Ring::prime_field(2);
const Ring F3 = Ring::prime_field(3);

std::map<int, HomologyGroup> shifted(const std::map<int, HomologyGroup>& h, int r) {
    std::map<int, HomologyGroup> out;
    for (auto [n, g] : h) {
        g.degree = n + r;
        out.emplace(g.degree, g);
    }
    return out;
}

// Rank of the map induced on H_n, over a field.
std::size_t homology_rank(const ChainMap& f, int n) {
    const Ring& R = f.ring();
    const auto& A = *f.source();
    const auto& B = *f.target();
    if (A.dim(n) == 0 || B.dim(n) == 0) return 0;
    Matrix cycles = kernel_basis(smith_normal_form(R, A.d(n)));
    Matrix bounds = B.d(n + 1);
    Matrix img = multiply(R, f.at(n), cycles);
    return rank(R, hstack({img, bounds}, B.dim(n))) - rank(R, bounds);
}

// Same homology and same induced ranks in every degree: the invariants of a
// map over a field up to quasi-isomorphism of source and target.
void check_same_map(const ChainMap& a, const ChainMap& b) {
    CHECK(homology_signature(*a.source()) == homology_signature(*b.source()));
    CHECK(homology_signature(*a.target()) == homology_signature(*b.target()));
    for (int n = -2; n <= 8; ++n) CHECK(homology_rank(a, n) == homology_rank(b, n));
}

struct Setup {
    std::vector<ChainMap> maps;
    BracketData data;
    ForwardDiagram fd;
    FilteredObject X;
};

Setup setup(const std::vector<ChainMap>& maps) {
    auto F = *solve_nullhomotopy(compose(maps[1], maps[0]));
    auto data = make_bracket_data(strictify_length2(maps[0], maps[1], F), maps);
    auto fd = forward_diagram(data.E);
    auto X = filtered_from_forward(fd);
    return Setup{maps, std::move(data), std::move(fd), std::move(X)};
}

}  // namespace

TEST_CASE("forward cube of a length-2 extension") {
    Rng rng(2);
    for (int t = 0; t < 8; ++t) {
        auto m = random_toda_diagram(t % 2 ? F3 : Z, rng, 3, RandomShape{0, 2, 2, false});
        auto s = setup(m);
        auto rep = verify_forward(s.fd, s.data.E);
        CHECK_MESSAGE(rep.ok, rep.message);
        CHECK(s.fd.F.vertices().size() == 9);
        // F(3,2) ~ suspension E(0,2) ~ suspension^2 A_0.
        auto h = homology_signature(*s.fd.F.vertex(CubeIndex::parse("32", Alphabet::Forward)));
        CHECK(h == shifted(homology_signature(*m[0].source()), 2));
        // F(1,1) ~ A_2.
        CHECK(homology_signature(*s.fd.F.vertex(CubeIndex::parse("11", Alphabet::Forward))) ==
              homology_signature(*m[1].target()));
    }
}

TEST_CASE("forward cube rejects a cube that is not extended") {
    Rng rng(4);
    auto m = random_toda_diagram(F2, rng, 3, RandomShape{0, 2, 2, false});
    auto s = setup(m);
    auto E = s.data.E;
    auto J = CubeIndex::parse("01", Alphabet::Ternary);
    E.set_edge(J, 0, scale(-1, E.edge(J, 0)));
    if (!verify_extended(E).ok) CHECK_THROWS_AS(forward_diagram(E), PreconditionError);
}

TEST_CASE("filtration quotients match the shifted diagram objects") {
    Rng rng(6);
    for (int t = 0; t < 8; ++t) {
        auto m = random_toda_diagram(t % 2 ? F2 : Z, rng, 3, RandomShape{0, 2, 2, false});
        auto s = setup(m);
        const auto& X = s.X;
        REQUIRE(X.length() == 1);
        // C_k ~ suspension^k A_{n-k} with n = 2.
        CHECK(homology_signature(*X.quotients[0]) == homology_signature(*m[1].target()));
        CHECK(homology_signature(*X.quotients[1]) == shifted(homology_signature(*m[0].target()), 1));
        CHECK(X.top() == s.fd.F.vertex(CubeIndex::parse("12", Alphabet::Forward)));
    }
}

TEST_CASE("gamma maps and the induced Toda diagram") {
    Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        const Ring& R = t % 2 ? F2 : F3;
        auto m = random_toda_diagram(R, rng, 3, RandomShape{0, 2, 2, false});
        auto s = setup(m);
        auto gammas = gamma_maps(s.X);
        REQUIRE(gammas.size() == 1);
        // gamma_1 ~ suspension f_1.
        check_same_map(gammas[0], suspension(m[1]));

        const auto& eng = *s.data.engine;
        REQUIRE(s.data.phi);
        const auto& q = s.fd.comparison.at(CubeIndex::parse("12", Alphabet::Forward));
        auto alpha = compose(homotopy_inverse(q).inverse, compose(eng.alpha(), eng.suspension_inverse()));
        auto phi = compose(*s.data.phi, q);
        auto toda = to_toda_diagram(s.X, alpha, phi);
        REQUIRE(toda.maps.size() == 3);
        CHECK(toda.witnesses.size() == 2);
        CHECK_NOTHROW(toda.validate());
        // One-fold suspension of the original diagram.
        for (std::size_t k = 0; k < 3; ++k) check_same_map(toda.maps[k], suspension(m[k]));

        // The generalized bracket on the forward data is the bracket value.
        auto gb = generalized_bracket(s.X, alpha, phi);
        CHECK(gb.value == eng.value(*s.data.phi));
        CHECK(gb.group_orders == eng.value_group().orders());
    }
}

TEST_CASE("generalized bracket with zero data") {
    Rng rng(9);
    auto m = random_toda_diagram(Z, rng, 3, RandomShape{0, 2, 2, false});
    auto s = setup(m);
    auto W = suspension(m[0].source());
    auto Zt = m[2].target();
    auto gb = generalized_bracket(s.X, ChainMap::zero(W, s.X.top()), ChainMap::zero(s.X.top(), Zt));
    CHECK(gb.is_zero);
    auto bad = ChainMap::zero(W, W);
    CHECK_THROWS_AS(generalized_bracket(s.X, bad, ChainMap::zero(s.X.top(), Zt)), InvalidInput);
    // Rank-one ends give a scalar class.
    auto P = wedge(Z, 0, 1);
    auto X = make_filtered_object(P, {});
    auto two = ChainMap(P, P, {{0, Matrix{{2}}}});
    auto g = generalized_bracket(X, two, ChainMap::identity(P));
    CHECK(g.group_orders == std::vector<Scalar>{0});
    CHECK(g.value == Element{2});
    CHECK_NOTHROW(generalized_bracket(X, two, ChainMap::identity(P), two, ChainMap::identity(P)));
    CHECK_THROWS_AS(generalized_bracket(X, two, ChainMap::identity(P), ChainMap::identity(P)), InvalidInput);
}

TEST_CASE("one-stage filtrations") {
    auto P = wedge(F2, 0, 2);
    auto X = make_filtered_object(P, {});
    CHECK(gamma_maps(X).empty());
    CHECK(X.length() == 0);
    auto toda = to_toda_diagram(X, ChainMap::zero(P, P), ChainMap::identity(P));
    CHECK(toda.maps.size() == 2);
    CHECK_THROWS_AS(to_toda_diagram(X, ChainMap::identity(P), ChainMap::identity(P)), PreconditionError);
    CHECK(sphere_wedge_triviality_check(X).trivial);
}

TEST_CASE("zero quotients give the zero diagram") {
    auto A = wedge(Z, 0, 1);
    auto B = wedge(Z, 1, 1);
    auto X1 = make_complex(ChainComplex(Z, 0, {1, 1}, {Matrix(0, 1), Matrix{{0}}}));
    ChainMap j(A, X1, {{0, Matrix{{1}}}});
    auto X = make_filtered_object(A, {j}, {ChainMap::zero(wedge(Z, 0, 1), A)});
    auto gammas = gamma_maps(X);
    REQUIRE(gammas.size() == 1);
    CHECK(gammas[0].is_zero());
    auto toda = to_toda_diagram(X, ChainMap::zero(B, X1), ChainMap::zero(X1, A));
    for (const auto& f : toda.maps) CHECK(f.is_zero());
}

TEST_CASE("attaching maps are checked") {
    // Moore complex as the cone of 2: Z -> Z.
    auto P = wedge(Z, 0, 1);
    auto M = moore(Z, 2);
    ChainMap j(P, M, {{0, Matrix{{1}}}});
    ChainMap two(P, P, {{0, Matrix{{2}}}});
    auto X = make_filtered_object(P, {j}, {two});
    CHECK(X.attaching_witness.size() == 1);
    ChainMap three(P, P, {{0, Matrix{{3}}}});
    CHECK_THROWS_AS(make_filtered_object(P, {j}, {three}), PreconditionError);
    auto twoP = wedge(Z, 0, 2);
    CHECK_THROWS_AS(make_filtered_object(P, {ChainMap(P, twoP, {{0, Matrix{{2}, {0}}}})}), PreconditionError);
}

TEST_CASE("Toda diagrams of random cellular filtrations") {
    Rng rng(12);
    for (const Ring& R : {F2, Z}) {
        for (int t = 0; t < 6; ++t) {
            Matrix d1{{1, 0}, {0, 2}};
            Matrix d2{{0}, {0}};
            if (t % 2) {
                d1 = Matrix{{1, 1}, {2, 2}};
                d2 = Matrix{{1}, {-1}};
            }
            auto X = cellular(R, d1, d2);
            REQUIRE(X.length() == 2);
            auto W = make_complex(ChainComplex(R, 1, {1, 1}, {Matrix(0, 1), Matrix{{0}}}));
            auto alpha = random_chain_map(W, X.top(), rng);
            auto phi = random_chain_map(X.top(), wedge(R, 0, 2), rng);
            auto toda = to_toda_diagram(X, alpha, phi);
            CHECK(toda.maps.size() == 4);
            CHECK_NOTHROW(toda.validate());
        }
    }
}

TEST_CASE("spherical condition") {
    CHECK(spherical_check(SphericalProfile::parse("2,4,5,7")).spherical);
    auto bad = spherical_check(SphericalProfile::parse("0,1,2"));
    CHECK_FALSE(bad.spherical);
    CHECK_FALSE(bad.message.empty());
    CHECK(spherical_check(SphericalProfile::parse("0,2,4,6,8")).spherical);
    CHECK_FALSE(spherical_check(SphericalProfile::parse("0,2,3,4")).spherical);
    CHECK(spherical_check(SphericalProfile::parse("inf,1,2,inf")).spherical);
    CHECK(SphericalProfile::parse("3, inf ,5").str() == "3,inf,5");
    CHECK(SphericalProfile::parse("2,4,5,7").length() == 1);
    CHECK_THROWS_AS(SphericalProfile::parse("1,x,3"), InvalidInput);
    CHECK_THROWS_AS(SphericalProfile::parse("1,2"), InvalidInput);
}

TEST_CASE("spherical check is monotone under well separated insertions") {
    Rng rng(14);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::optional<int>> c;
        int v = int(rng() % 3);
        const std::size_t len = 3 + rng() % 4;
        for (std::size_t i = 0; i < len; ++i) {
            c.push_back(v);
            v += 1 + int(rng() % 3);
        }
        SphericalProfile p{c};
        if (!spherical_check(p).spherical) continue;
        // Insert between positions i-1 and i with gaps >= 2 on both sides.
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (*c[i] - *c[i - 1] < 4) continue;
            auto q = c;
            q.insert(q.begin() + std::ptrdiff_t(i), *c[i - 1] + 2);
            CHECK(spherical_check(SphericalProfile{q}).spherical);
        }
        // Appending a well separated stage at either end.
        auto front = c;
        front.insert(front.begin(), *c.front() - 2);
        CHECK(spherical_check(SphericalProfile{front}).spherical);
        auto back = c;
        back.push_back(*c.back() + 2);
        CHECK(spherical_check(SphericalProfile{back}).spherical);
    }
}

TEST_CASE("profile of a zero differential filtration") {
    // C_0 = Z^2[0], C_1 = Z[2], C_2 = Z[3]; W = Z[5], Z = Z[-1].
    auto X0 = wedge(Z, 0, 2);
    auto X1 = make_complex(ChainComplex(Z, 0, {2, 0, 1}, {Matrix(0, 2), Matrix(2, 0), Matrix(0, 1)}));
    auto X2 = make_complex(ChainComplex(Z, 0, {2, 0, 1, 1}, {Matrix(0, 2), Matrix(2, 0), Matrix(0, 1), Matrix{{0}}}));
    ChainMap j0(X0, X1, {{0, Matrix::identity(2)}});
    ChainMap j1(X1, X2, {{0, Matrix::identity(2)}, {2, Matrix{{1}}}});
    auto X = make_filtered_object(X0, {j0, j1});
    auto p = profile(X, wedge(Z, 5, 1), wedge(Z, -1, 1));
    CHECK(p.str() == "-1,0,2,3,5");
    // c_1 + 1 = c_2 with c_0 + 1 < c_1 and c_2 + 1 < c_3.
    CHECK(spherical_check(p).spherical);
    auto q = profile(X, wedge(Z, 4, 1), wedge(Z, -1, 1));
    CHECK_FALSE(spherical_check(q).spherical);
    auto acyclic = profile(X, make_complex(ChainComplex(Z)), wedge(Z, -1, 1));
    CHECK_FALSE(acyclic.c.back().has_value());
}

TEST_CASE("sphere wedges have trivial brackets") {
    Rng rng(21);
    for (const Ring& R : {F2, Z}) {
        for (int t = 0; t < 6; ++t) {
            // Orthogonal attaching data: d1 d2 = 0.
            Matrix d1{{1, 1}, {2, 2}}, d2{{1}, {-1}};
            if (t % 3 == 1) {
                d1 = Matrix{{2, 0}, {0, 0}};
                d2 = Matrix{{0}, {1}};
            } else if (t % 3 == 2) {
                d1 = Matrix{{0, 0}, {0, 0}};
                d2 = Matrix{{3}, {1}};
            }
            auto X = cellular(R, d1, d2);
            auto rep = sphere_wedge_triviality_check(X);
            CHECK(rep.trivial);
            CHECK(rep.pairs_checked == 1);
            auto W = wedge(R, 1, 1);
            auto alpha = random_chain_map(W, X.top(), rng);
            auto phi = random_chain_map(X.top(), wedge(R, 0, 1), rng);
            auto toda = to_toda_diagram(X, alpha, phi);
            auto b = higher_bracket(toda.maps);
            CHECK(b.contains_zero);
        }
    }
    // A quotient with a differential is refused.
    auto M = moore(Z, 2);
    CHECK_THROWS_AS(sphere_wedge_triviality_check(make_filtered_object(M, {})), PreconditionError);
}
