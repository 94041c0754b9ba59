#include "toda/symbolic.hpp"

#include <algorithm>

namespace toda {

namespace {

bool remainder_has_one(const MarkerDecomposition& md) {
    return std::find(md.remainder.begin(), md.remainder.end(), 1) != md.remainder.end();
}

}  // namespace

SymbolicType classify_vertex(const CubeIndex& j) {
    const auto md = marker_decomposition(j);
    if (remainder_has_one(md)) return Contractible{};
    // Remainder twos are stripped first (each is one suspension); what is left
    // is either an object of the diagram or an iterated cofiber.
    if (md.stage == 0) return Suspension{md.remainder_twos, md.marker.size()};
    return ConeStage{md.stage, md.remainder_twos, md.marker.size()};
}

CubeIndex normal_form(const CubeIndex& j) {
    const auto md = marker_decomposition(j);
    if (remainder_has_one(md))
        throw PreconditionError("normal_form: remainder of " + j.str() +
                                " contains a 1; the vertex is contractible");
    auto d = j.digits();
    for (std::size_t i = md.marker.size(); i < d.size(); ++i)
        if (d[i] == 2) d[i] = 0;
    return CubeIndex(std::move(d), j.alphabet());
}

std::string describe(const SymbolicType& t) {
    struct V {
        std::string operator()(const Contractible&) const { return "Contractible"; }
        std::string operator()(const Suspension& s) const {
            return "Suspension r=" + std::to_string(s.r) + " k=" + std::to_string(s.k);
        }
        std::string operator()(const ConeStage& c) const {
            return "ConeStage stage=" + std::to_string(c.stage) + " r=" + std::to_string(c.r) +
                   " marker_length=" + std::to_string(c.marker_length);
        }
    };
    return std::visit(V{}, t);
}

}  // namespace toda
