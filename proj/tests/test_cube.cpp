#include <doctest.h>

#include <set>

#include "toda/symbolic.hpp"

using namespace toda;

namespace {

CubeIndex T(const char* s) { return CubeIndex::parse(s, Alphabet::Ternary); }
CubeIndex B(const char* s) { return CubeIndex::parse(s, Alphabet::Binary); }

}  // namespace

TEST_CASE("poset order") {
    CHECK(poset_leq(B("00"), B("10")));
    CHECK_FALSE(poset_leq(B("10"), B("01")));
    CHECK(poset_leq(B("101"), B("101")));
    CHECK_THROWS_AS(poset_leq(B("10"), B("100")), InvalidInput);
    CHECK_THROWS_AS(poset_leq(B("10"), T("10")), InvalidInput);
    // partial order axioms, exhaustive for n <= 3 on the ternary cube
    for (std::size_t n = 1; n <= 3; ++n) {
        auto all = all_indices(n, Alphabet::Ternary);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (poset_leq(a, b) && poset_leq(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (poset_leq(a, b) && poset_leq(b, c)) CHECK(poset_leq(a, c));
            }
    }
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(CubeIndex({}, Alphabet::Binary), InvalidInput);
    CHECK_THROWS_AS(B("012"), InvalidInput);
    CHECK_THROWS_AS(CubeIndex::parse("0", Alphabet::Forward), InvalidInput);
}

TEST_CASE("spine vertices and filtration level") {
    CHECK(vertex_Jk(3, 0).str() == "000");
    CHECK(vertex_Jk(3, 2).str() == "110");
    CHECK(vertex_Jk(3, 3).str() == "111");
    CHECK_THROWS_AS(vertex_Jk(3, 4), InvalidInput);
    CHECK(filtration_level(B("000")) == 0);
    CHECK(filtration_level(B("101")) == 2);
    CHECK(filtration_level(B("111")) == 3);
    CHECK_THROWS_AS(filtration_level(T("102")), InvalidInput);
}

TEST_CASE("marker decomposition") {
    auto md = marker_decomposition(T("1221122202012012"));
    CHECK(md.str() == "M=12211222 sigma=3 R=02012012 r=3");
    auto a = marker_decomposition(T("012"));
    CHECK(a.marker.empty());
    CHECK(a.stage == 0);
    CHECK(a.remainder_twos == 1);
    auto b = marker_decomposition(T("122"));
    CHECK(b.stage == 2);
    CHECK(b.remainder.empty());
    // round trip and bounds, exhaustive for n <= 8
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& j : all_indices(n, Alphabet::Ternary)) {
            auto m = marker_decomposition(j);
            auto cat = m.marker;
            cat.insert(cat.end(), m.remainder.begin(), m.remainder.end());
            CHECK(cat == j.digits());
            CHECK(m.stage <= m.marker.size());
            CHECK(m.remainder_twos <= m.remainder.size());
            if (!m.remainder.empty()) CHECK(m.remainder[0] == 0);
        }
}

TEST_CASE("cofibration triples") {
    auto one = cofibration_triples(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].first.str() == "0");
    CHECK(one[0].last.str() == "2");
    // brute force count n * 3^(n-1): for each axis, each vertex appears once
    for (std::size_t n = 1; n <= 4; ++n) {
        auto ts = cofibration_triples(n);
        std::size_t expect = 0;
        for (std::size_t axis = 0; axis < n; ++axis)
            for (const auto& j : all_indices(n, Alphabet::Ternary))
                if (j[axis] == 0) ++expect;
        CHECK(ts.size() == expect);
        for (std::size_t axis = 0; axis < n; ++axis) {
            std::set<CubeIndex> seen;
            for (const auto& t : ts)
                if (t.axis == axis) {
                    CHECK(poset_leq(t.first, t.middle));
                    CHECK(poset_leq(t.middle, t.last));
                    CHECK(seen.insert(t.first).second);
                    CHECK(seen.insert(t.middle).second);
                    CHECK(seen.insert(t.last).second);
                }
            CHECK(seen.size() == all_indices(n, Alphabet::Ternary).size());
        }
    }
}

TEST_CASE("forward relabel") {
    CHECK(forward_relabel(T("11")).str() == "11");
    CHECK(forward_relabel(T("11")).alphabet() == Alphabet::Forward);
    CHECK_THROWS_AS(forward_relabel(T("10")), InvalidInput);
    CHECK(forward_Jk(3, 1).str() == "111");
    CHECK(forward_Jk(3, 3).str() == "122");
    CHECK(forward_unrelabel(forward_Jk(3, 2)).str() == "112");
}

TEST_CASE("vertex classification") {
    for (std::size_t k = 0; k <= 4; ++k) {
        auto j = vertex_Jk(4, k).with_alphabet(Alphabet::Ternary);
        CHECK(classify_vertex(j) == SymbolicType{Suspension{0, k}});
    }
    CHECK(classify_vertex(T("0222")) == SymbolicType{Suspension{3, 0}});
    CHECK(std::holds_alternative<Contractible>(classify_vertex(T("101"))));
    CHECK(classify_vertex(T("222")) == SymbolicType{ConeStage{3, 0, 3}});
    CHECK(classify_vertex(T("1202")) == SymbolicType{ConeStage{1, 1, 2}});
    CHECK(normal_form(T("102")).str() == "100");
    CHECK(normal_form(T("120")).str() == "120");
    CHECK(normal_form(T("20202")).str() == "20000");
    CHECK_THROWS_AS(normal_form(T("101")), PreconditionError);
    // invariance under normal form up to remainder suspensions
    for (const auto& j : all_indices(4, Alphabet::Ternary)) {
        auto t = classify_vertex(j);
        if (std::holds_alternative<Contractible>(t)) continue;
        auto r = marker_decomposition(j).remainder_twos;
        auto t0 = classify_vertex(normal_form(j));
        if (auto* s = std::get_if<Suspension>(&t)) {
            CHECK(t0 == SymbolicType{Suspension{0, s->k}});
            CHECK(s->r == r);
        } else {
            auto c = std::get<ConeStage>(t);
            CHECK(t0 == SymbolicType{ConeStage{c.stage, 0, c.marker_length}});
        }
    }
}
