#pragma once

#include <string>
#include <variant>

#include "toda/cube.hpp"

namespace toda {

/// Predicted homotopy type of a vertex E(J) of an extended diagram, read off
/// from the index alone.
struct Contractible {
    friend bool operator==(const Contractible&, const Contractible&) = default;
};

/// The r-fold suspension of A_k.
struct Suspension {
    std::size_t r = 0;
    std::size_t k = 0;
    friend bool operator==(const Suspension&, const Suspension&) = default;
};

/// An iterated cofiber of cone length `stage`, suspended r times.
struct ConeStage {
    std::size_t stage = 0;
    std::size_t r = 0;
    std::size_t marker_length = 0;
    friend bool operator==(const ConeStage&, const ConeStage&) = default;
};

using SymbolicType = std::variant<Contractible, Suspension, ConeStage>;

SymbolicType classify_vertex(const CubeIndex& j);

/// Replaces every digit 2 of the remainder by 0. Throws PreconditionError when
/// the remainder contains a 1 (the vertex is contractible).
CubeIndex normal_form(const CubeIndex& j);

std::string describe(const SymbolicType& t);

}  // namespace toda
