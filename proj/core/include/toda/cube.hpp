#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toda/error.hpp"

namespace toda {

/// Digit alphabets of the three cube posets: {0,1}, {0,1,2} and the forward
/// cube {1,2,3}.
enum class Alphabet : std::uint8_t { Binary, Ternary, Forward };

int alphabet_min(Alphabet a) noexcept;
int alphabet_max(Alphabet a) noexcept;
const char* alphabet_name(Alphabet a) noexcept;

/// A vertex label (e_1, ..., e_n) of a cube poset. Digit e_1 is the most
/// significant position in every ordering.
class CubeIndex {
public:
    CubeIndex(std::vector<int> digits, Alphabet alphabet);
    /// Parses a contiguous digit string such as "1221".
    static CubeIndex parse(std::string_view digits, Alphabet alphabet);

    Alphabet alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return digits_.size(); }
    int operator[](std::size_t i) const noexcept { return digits_[i]; }
    const std::vector<int>& digits() const noexcept { return digits_; }

    /// Copy with digit i replaced; the alphabet may be widened.
    CubeIndex with(std::size_t i, int digit) const;
    CubeIndex with_alphabet(Alphabet a) const { return CubeIndex(digits_, a); }

    std::string str() const;

    friend bool operator==(const CubeIndex&, const CubeIndex&) = default;
    /// Total lexicographic order (alphabet first), used for deterministic maps.
    friend std::strong_ordering operator<=>(const CubeIndex& a, const CubeIndex& b) {
        if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
        return a.digits_ <=> b.digits_;
    }

private:
    std::vector<int> digits_;
    Alphabet alphabet_;
};

/// Marker / stage / remainder decomposition of a ternary index.
struct MarkerDecomposition {
    std::vector<int> marker;
    std::size_t stage = 0;
    std::vector<int> remainder;
    std::size_t remainder_twos = 0;

    std::string str() const;
};

/// Axis-aligned triple J' < J'' < J''' of the ternary cube (digit at `axis`
/// stepping 0, 1, 2). `axis` is 0-based.
struct CofibrationTriple {
    std::size_t axis;
    CubeIndex first, middle, last;
};

/// Product order: e_i <= e'_i for every i.
bool poset_leq(const CubeIndex& a, const CubeIndex& b);

/// (1,...,1,0,...,0) with k ones.
CubeIndex vertex_Jk(std::size_t n, std::size_t k);

/// Digit sum of a binary index (composition length from the initial vertex).
std::size_t filtration_level(const CubeIndex& j);

MarkerDecomposition marker_decomposition(const CubeIndex& j);

/// All n * 3^(n-1) triples, ordered by axis then base digits lexicographically.
std::vector<CofibrationTriple> cofibration_triples(std::size_t n);

/// Embeds a {1,2}-index of the ternary cube into the forward cube.
CubeIndex forward_relabel(const CubeIndex& j);
/// Inverse of forward_relabel; the index must use only digits 1 and 2.
CubeIndex forward_unrelabel(const CubeIndex& j);
/// (1,...,1,2,...,2) with n-k+1 ones, 1 <= k <= n, in the forward alphabet.
CubeIndex forward_Jk(std::size_t n, std::size_t k);

/// Every index of the cube of dimension n over the alphabet, in lexicographic order.
std::vector<CubeIndex> all_indices(std::size_t n, Alphabet a);

/// Indices J' covered by J (one digit lower by exactly one), lexicographic.
std::vector<CubeIndex> lower_covers(const CubeIndex& j);

}  // namespace toda
