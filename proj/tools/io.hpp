#pragma once

// Canonical JSON documents for complexes, maps, diagrams, filtered objects
// and results. Every parser throws ParseError naming the offending field.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toda/bracket.hpp"
#include "toda/filtered.hpp"

namespace toda::io {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

/// Resolves string references ("source": "a.json") relative to `base`.
struct Context {
    std::filesystem::path base;
    std::optional<Ring> ring;  // forced ring (--ring), checked against documents
};

Json ring_to_json(const Ring& R);
Ring ring_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const Ring& R, const std::string& path);

Json complex_to_json(const ChainComplex& C);
ComplexPtr complex_from_json(const Json& j, const Context& ctx, const std::string& path = "");

/// `with_ends` writes source and target inline; otherwise the caller implies them.
Json map_to_json(const GradedMap& f, bool with_ends = true);
ChainMap chain_map_from_json(const Json& j, const Context& ctx, const std::string& path = "",
                             ComplexPtr source = nullptr, ComplexPtr target = nullptr);
GradedMap graded_map_from_json(const Json& j, ComplexPtr source, ComplexPtr target, const Ring& R,
                               const std::string& path);

Json diagram_to_json(const TodaDiagramInput& d);
TodaDiagramInput diagram_from_json(const Json& j, const Context& ctx);

Json filtered_to_json(const FilteredObject& X);
FilteredObject filtered_from_json(const Json& j, const Context& ctx);

Json element_to_json(const Element& x);
Json bracket_to_json(const BracketResult& b);
Json rectify_to_json(const RectifyResult& r);
Json oracle_to_json(const OracleResult& o);

/// Adds format_version and prints with sorted keys and a trailing newline.
std::string print(Json doc);
Json parse_text(const std::string& text, const std::string& origin);
Json load(const std::filesystem::path& file);

}  // namespace toda::io
