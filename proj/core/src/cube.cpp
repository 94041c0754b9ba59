#include "toda/cube.hpp"

#include <algorithm>

namespace toda {

int alphabet_min(Alphabet a) noexcept { return a == Alphabet::Forward ? 1 : 0; }
int alphabet_max(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::Binary: return 1;
        case Alphabet::Ternary: return 2;
        case Alphabet::Forward: return 3;
    }
    return 0;
}
const char* alphabet_name(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::Binary: return "binary";
        case Alphabet::Ternary: return "ternary";
        case Alphabet::Forward: return "forward";
    }
    return "?";
}

CubeIndex::CubeIndex(std::vector<int> digits, Alphabet alphabet)
    : digits_(std::move(digits)), alphabet_(alphabet) {
    if (digits_.empty()) throw InvalidInput("cube index must have length >= 1");
    for (int d : digits_)
        if (d < alphabet_min(alphabet_) || d > alphabet_max(alphabet_))
            throw InvalidInput("digit " + std::to_string(d) + " outside the " +
                               alphabet_name(alphabet_) + " alphabet");
}

CubeIndex CubeIndex::parse(std::string_view s, Alphabet alphabet) {
    std::vector<int> digits;
    for (char c : s) {
        if (c < '0' || c > '9') throw InvalidInput(std::string("not a digit: '") + c + "'");
        digits.push_back(c - '0');
    }
    return CubeIndex(std::move(digits), alphabet);
}

CubeIndex CubeIndex::with(std::size_t i, int digit) const {
    auto d = digits_;
    d.at(i) = digit;
    Alphabet a = alphabet_;
    if (digit > alphabet_max(a)) a = digit == 2 ? Alphabet::Ternary : Alphabet::Forward;
    return CubeIndex(std::move(d), a);
}

std::string CubeIndex::str() const {
    std::string s;
    for (int d : digits_) s.push_back(char('0' + d));
    return s;
}

std::string MarkerDecomposition::str() const {
    std::string m, r;
    for (int d : marker) m.push_back(char('0' + d));
    for (int d : remainder) r.push_back(char('0' + d));
    return "M=" + m + " sigma=" + std::to_string(stage) + " R=" + r +
           " r=" + std::to_string(remainder_twos);
}

bool poset_leq(const CubeIndex& a, const CubeIndex& b) {
    if (a.size() != b.size()) throw InvalidInput("poset_leq: indices of different length");
    if (a.alphabet() != b.alphabet()) throw InvalidInput("poset_leq: indices of different alphabets");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

CubeIndex vertex_Jk(std::size_t n, std::size_t k) {
    if (n == 0 || k > n) throw InvalidInput("vertex_Jk: need 0 <= k <= n, n >= 1");
    std::vector<int> d(n, 0);
    for (std::size_t i = 0; i < k; ++i) d[i] = 1;
    return CubeIndex(std::move(d), Alphabet::Binary);
}

std::size_t filtration_level(const CubeIndex& j) {
    if (j.alphabet() != Alphabet::Binary)
        for (int d : j.digits())
            if (d > 1) throw InvalidInput("filtration_level: non-binary digit");
    std::size_t s = 0;
    for (int d : j.digits()) s += std::size_t(d);
    return s;
}

MarkerDecomposition marker_decomposition(const CubeIndex& j) {
    if (j.alphabet() == Alphabet::Forward)
        throw InvalidInput("marker_decomposition: ternary index required");
    MarkerDecomposition md;
    std::size_t i = 0;
    while (i < j.size() && (j[i] == 1 || j[i] == 2)) md.marker.push_back(j[i++]);
    for (auto it = md.marker.rbegin(); it != md.marker.rend() && *it == 2; ++it) ++md.stage;
    for (; i < j.size(); ++i) {
        md.remainder.push_back(j[i]);
        if (j[i] == 2) ++md.remainder_twos;
    }
    return md;
}

std::vector<CofibrationTriple> cofibration_triples(std::size_t n) {
    if (n == 0) throw InvalidInput("cofibration_triples: n must be >= 1");
    std::vector<CofibrationTriple> out;
    std::size_t base_count = 1;
    for (std::size_t i = 1; i < n; ++i) base_count *= 3;
    for (std::size_t axis = 0; axis < n; ++axis) {
        for (std::size_t code = 0; code < base_count; ++code) {
            // code enumerates the n-1 base digits, most significant first
            std::vector<int> base(n - 1);
            std::size_t c = code;
            for (std::size_t k = n - 1; k-- > 0;) {
                base[k] = int(c % 3);
                c /= 3;
            }
            auto make = [&](int digit) {
                std::vector<int> d;
                for (std::size_t k = 0, b = 0; k < n; ++k) d.push_back(k == axis ? digit : base[b++]);
                return CubeIndex(std::move(d), Alphabet::Ternary);
            };
            out.push_back({axis, make(0), make(1), make(2)});
        }
    }
    return out;
}

CubeIndex forward_relabel(const CubeIndex& j) {
    for (int d : j.digits())
        if (d != 1 && d != 2) throw InvalidInput("forward_relabel: digits must be 1 or 2");
    return CubeIndex(j.digits(), Alphabet::Forward);
}

CubeIndex forward_unrelabel(const CubeIndex& j) {
    for (int d : j.digits())
        if (d != 1 && d != 2) throw InvalidInput("forward_unrelabel: digits must be 1 or 2");
    return CubeIndex(j.digits(), Alphabet::Ternary);
}

CubeIndex forward_Jk(std::size_t n, std::size_t k) {
    if (n == 0 || k < 1 || k > n) throw InvalidInput("forward_Jk: need 1 <= k <= n");
    std::vector<int> d(n, 2);
    for (std::size_t i = 0; i < n - k + 1; ++i) d[i] = 1;
    return CubeIndex(std::move(d), Alphabet::Forward);
}

std::vector<CubeIndex> all_indices(std::size_t n, Alphabet a) {
    if (n == 0) throw InvalidInput("all_indices: n must be >= 1");
    const int lo = alphabet_min(a), hi = alphabet_max(a);
    std::vector<CubeIndex> out;
    std::vector<int> d(n, lo);
    for (;;) {
        out.emplace_back(d, a);
        std::size_t i = n;
        while (i > 0 && d[i - 1] == hi) d[--i] = lo;
        if (i == 0) break;
        ++d[i - 1];
    }
    return out;
}

std::vector<CubeIndex> lower_covers(const CubeIndex& j) {
    std::vector<CubeIndex> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        if (j[i] > alphabet_min(j.alphabet())) {
            auto d = j.digits();
            --d[i];
            out.emplace_back(std::move(d), j.alphabet());
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toda
