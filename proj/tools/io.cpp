#include "io.hpp"

#include <fstream>
#include <sstream>

namespace toda::io {

namespace {

std::string field(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(field(path, key), "missing field");
    return *it;
}

Scalar integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<Scalar>();
}

// A string is a file reference resolved against the context base.
std::pair<Json, Context> resolve(const Json& j, const Context& ctx, const std::string& path) {
    if (!j.is_string()) return {j, ctx};
    auto file = ctx.base / j.get<std::string>();
    Context inner = ctx;
    inner.base = file.parent_path();
    try {
        return {load(file), inner};
    } catch (const ParseError& e) {
        throw ParseError(path, e.what());
    }
}

}  // namespace

// ---- rings and matrices ----

Json ring_to_json(const Ring& R) {
    if (R.is_field()) return Json{{"Fp", R.characteristic()}};
    return "Z";
}

Ring ring_from_json(const Json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "Z") return Ring::integers();
    if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
        Scalar p = integer(j["Fp"], field(path, "Fp"));
        if (!is_prime(p)) throw ParseError(field(path, "Fp"), std::to_string(p) + " is not prime");
        return Ring::prime_field(p);
    }
    throw ParseError(path, "expected \"Z\" or {\"Fp\": p}");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const Ring& R, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of rows");
    if (j.size() != rows)
        throw ParseError(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        const auto rp = item(path, r);
        if (!row.is_array() || row.size() != cols)
            throw ParseError(rp, "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            Scalar v = integer(row[c], item(rp, c));
            if (R.is_field() && (v < 0 || v >= R.characteristic()))
                throw ParseError(item(rp, c), "entry " + std::to_string(v) + " outside [0," +
                                                  std::to_string(R.characteristic()) + ")");
            m(r, c) = v;
        }
    }
    return m;
}

// ---- complexes ----

Json complex_to_json(const ChainComplex& C) {
    Json j;
    j["ring"] = ring_to_json(C.ring());
    j["min_degree"] = C.is_zero() ? 0 : C.min_degree();
    Json dims = Json::array(), diffs = Json::array();
    if (!C.is_zero())
        for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
            dims.push_back(C.dim(n));
            diffs.push_back(n == C.min_degree() ? Json::array() : matrix_to_json(C.d(n)));
        }
    j["dims"] = std::move(dims);
    j["differentials"] = std::move(diffs);
    return j;
}

ComplexPtr complex_from_json(const Json& j0, const Context& ctx0, const std::string& path) {
    auto [j, ctx] = resolve(j0, ctx0, path);
    Ring R = ring_from_json(require(j, "ring", path), field(path, "ring"));
    if (ctx.ring && !(*ctx.ring == R))
        throw ParseError(field(path, "ring"), "ring " + R.name() + " does not match the requested " + ctx.ring->name());
    int lo = int(integer(require(j, "min_degree", path), field(path, "min_degree")));
    const auto& jd = require(j, "dims", path);
    if (!jd.is_array()) throw ParseError(field(path, "dims"), "expected an array");
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < jd.size(); ++i) {
        Scalar d = integer(jd[i], item(field(path, "dims"), i));
        if (d < 0) throw ParseError(item(field(path, "dims"), i), "negative rank");
        dims.push_back(std::size_t(d));
    }
    const auto& jm = require(j, "differentials", path);
    const auto dpath = field(path, "differentials");
    if (!jm.is_array() || jm.size() != dims.size())
        throw ParseError(dpath, "expected one matrix per entry of dims");
    std::vector<Matrix> d;
    for (std::size_t i = 0; i < dims.size(); ++i)
        d.push_back(matrix_from_json(jm[i], i == 0 ? 0 : dims[i - 1], dims[i], R, item(dpath, i)));
    for (std::size_t i = 2; i < dims.size(); ++i)
        if (!multiply(R, d[i - 1], d[i]).is_zero())
            throw ParseError(item(dpath, i), "d d != 0 at degree " + std::to_string(lo + int(i)));
    try {
        return make_complex(ChainComplex(R, lo, std::move(dims), std::move(d)));
    } catch (const InvalidInput& e) {
        throw ParseError(path, e.what());
    }
}

// ---- maps ----

Json map_to_json(const GradedMap& f, bool with_ends) {
    Json j;
    if (with_ends) {
        j["source"] = complex_to_json(*f.source());
        j["target"] = complex_to_json(*f.target());
    }
    if (f.degree() != 0) j["degree"] = f.degree();
    Json comps = Json::object();
    const auto& A = *f.source();
    if (!A.is_zero())
        for (int n = A.min_degree(); n <= A.max_degree(); ++n) {
            Matrix m = f.at(n);
            if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) comps[std::to_string(n)] = matrix_to_json(m);
        }
    j["components"] = std::move(comps);
    return j;
}

GradedMap graded_map_from_json(const Json& j, ComplexPtr source, ComplexPtr target, const Ring& R,
                               const std::string& path) {
    int k = 0;
    if (j.contains("degree")) k = int(integer(j["degree"], field(path, "degree")));
    const auto& jc = require(j, "components", path);
    const auto cpath = field(path, "components");
    if (!jc.is_object()) throw ParseError(cpath, "expected an object keyed by degree");
    std::map<int, Matrix> comps;
    for (auto it = jc.begin(); it != jc.end(); ++it) {
        const auto kp = field(cpath, it.key());
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(kp, "degree key is not an integer");
        }
        comps[n] = matrix_from_json(it.value(), target->dim(n + k), source->dim(n), R, kp);
    }
    try {
        return GradedMap(std::move(source), std::move(target), k, comps);
    } catch (const InvalidInput& e) {
        throw ParseError(path, e.what());
    }
}

ChainMap chain_map_from_json(const Json& j0, const Context& ctx0, const std::string& path, ComplexPtr source,
                             ComplexPtr target) {
    auto [j, ctx] = resolve(j0, ctx0, path);
    if (!j.is_object()) throw ParseError(path, "expected a map object");
    auto end = [&](const char* key, ComplexPtr given) {
        if (!j.contains(key)) {
            if (!given) throw ParseError(field(path, key), "missing field");
            return given;
        }
        auto c = complex_from_json(j[key], ctx, field(path, key));
        if (given && !(*given == *c)) throw ParseError(field(path, key), "does not match the adjacent object");
        return given ? given : c;
    };
    auto src = end("source", source);
    auto tgt = end("target", target);
    if (!(src->ring() == tgt->ring())) throw ParseError(path, "source and target rings differ");
    auto g = graded_map_from_json(j, src, tgt, src->ring(), path);
    if (g.degree() != 0) throw ParseError(field(path, "degree"), "a chain map has degree 0");
    try {
        return ChainMap(std::move(g));
    } catch (const InvalidInput& e) {
        throw ParseError(path, std::string("not a chain map: ") + e.what());
    }
}

// ---- diagrams ----

Json diagram_to_json(const TodaDiagramInput& d) {
    Json j;
    Json maps = Json::array();
    for (const auto& f : d.maps) maps.push_back(map_to_json(f));
    j["maps"] = std::move(maps);
    if (!d.witnesses.empty()) {
        Json w = Json::array();
        for (const auto& h : d.witnesses) w.push_back(h ? map_to_json(*h, false) : Json(nullptr));
        j["witnesses"] = std::move(w);
    }
    return j;
}

TodaDiagramInput diagram_from_json(const Json& j, const Context& ctx) {
    const auto& jm = require(j, "maps", "");
    if (!jm.is_array() || jm.empty()) throw ParseError("maps", "expected a non-empty array");
    TodaDiagramInput d;
    for (std::size_t k = 0; k < jm.size(); ++k) {
        ComplexPtr src = k == 0 ? nullptr : d.maps.back().target();
        d.maps.push_back(chain_map_from_json(jm[k], ctx, item("maps", k), src));
    }
    if (j.contains("witnesses")) {
        const auto& jw = j["witnesses"];
        if (!jw.is_array() || jw.size() + 1 != d.maps.size())
            throw ParseError("witnesses", "expected one entry per adjacent composite");
        for (std::size_t k = 0; k < jw.size(); ++k) {
            if (jw[k].is_null()) {
                d.witnesses.emplace_back();
                continue;
            }
            const auto& f = d.maps[k];
            const auto& g = d.maps[k + 1];
            auto h = graded_map_from_json(jw[k], f.source(), g.target(), f.ring(), item("witnesses", k));
            if (h.degree() != 1) throw ParseError(item("witnesses", k), "a nullhomotopy has degree 1");
            d.witnesses.emplace_back(std::move(h));
        }
    }
    return d;
}

Json filtered_to_json(const FilteredObject& X) {
    Json j;
    Json stages = Json::array(), inc = Json::array(), att = Json::array();
    for (const auto& s : X.stages) stages.push_back(complex_to_json(*s));
    for (const auto& f : X.inclusions) inc.push_back(map_to_json(f, false));
    for (const auto& g : X.attaching) {
        if (!g) {
            att.push_back(nullptr);
            continue;
        }
        Json m = map_to_json(*g, false);
        m["source"] = complex_to_json(*g->source());
        att.push_back(std::move(m));
    }
    j["stages"] = std::move(stages);
    j["inclusions"] = std::move(inc);
    j["attaching"] = std::move(att);
    return j;
}

FilteredObject filtered_from_json(const Json& j, const Context& ctx) {
    const auto& js = require(j, "stages", "");
    if (!js.is_array() || js.empty()) throw ParseError("stages", "expected a non-empty array");
    std::vector<ComplexPtr> stages;
    for (std::size_t k = 0; k < js.size(); ++k) stages.push_back(complex_from_json(js[k], ctx, item("stages", k)));
    std::vector<ChainMap> inc;
    if (j.contains("inclusions")) {
        const auto& ji = j["inclusions"];
        if (!ji.is_array() || ji.size() + 1 != stages.size())
            throw ParseError("inclusions", "expected one map per consecutive pair of stages");
        for (std::size_t k = 0; k < ji.size(); ++k)
            inc.push_back(chain_map_from_json(ji[k], ctx, item("inclusions", k), stages[k], stages[k + 1]));
    } else if (stages.size() > 1) {
        throw ParseError("inclusions", "missing field");
    }
    std::vector<std::optional<ChainMap>> att;
    if (j.contains("attaching")) {
        const auto& ja = j["attaching"];
        if (!ja.is_array() || ja.size() != inc.size())
            throw ParseError("attaching", "expected one entry (or null) per inclusion");
        for (std::size_t k = 0; k < ja.size(); ++k) {
            if (ja[k].is_null()) {
                att.emplace_back();
                continue;
            }
            att.emplace_back(chain_map_from_json(ja[k], ctx, item("attaching", k), nullptr, stages[k]));
        }
    }
    return make_filtered_object(stages.front(), std::move(inc), std::move(att));
}

// ---- results ----

Json element_to_json(const Element& x) {
    Json a = Json::array();
    for (auto v : x) a.push_back(v);
    return a;
}

namespace {

Json elements(const std::vector<Element>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(element_to_json(x));
    return a;
}

}  // namespace

Json bracket_to_json(const BracketResult& b) {
    Json j;
    j["kind"] = "bracket";
    j["n"] = b.n;
    j["group_orders"] = b.group_orders;
    j["value"] = element_to_json(b.value_set.representative);
    j["indeterminacy"] = elements(b.value_set.subgroup.generators());
    j["contains_zero"] = b.contains_zero;
    j["search_policy"] = b.search_policy;
    j["exhaustive"] = b.exhaustive;
    if (b.enumerated) j["values"] = elements(*b.enumerated);
    return j;
}

Json oracle_to_json(const OracleResult& o) {
    Json j;
    j["group_orders"] = o.group_orders;
    j["value"] = element_to_json(o.value_set.representative);
    j["indeterminacy"] = elements(o.value_set.subgroup.generators());
    j["contains_zero"] = o.value_set.contains_zero();
    if (o.enumerated) j["values"] = elements(*o.enumerated);
    return j;
}

Json rectify_to_json(const RectifyResult& r) {
    Json j;
    j["kind"] = "rectify";
    j["search_policy"] = r.search_policy;
    j["nodes"] = r.nodes;
    if (r.success) {
        j["status"] = "strictified";
        Json maps = Json::array(), comps = Json::array();
        for (const auto& f : r.strict.maps) maps.push_back(map_to_json(f));
        for (const auto& c : r.strict.comparisons) comps.push_back(map_to_json(c));
        j["strict"] = Json{{"maps", std::move(maps)}, {"comparisons", std::move(comps)}};
        return j;
    }
    j["status"] = "obstruction";
    j["stage"] = r.stage;
    j["search_exhausted"] = r.search_exhausted;
    j["caveat"] = r.caveat;
    Json vals = Json::array();
    for (const auto& b : r.values) vals.push_back(bracket_to_json(b));
    j["values"] = std::move(vals);
    return j;
}

// ---- text ----

std::string print(Json doc) {
    doc["format_version"] = kFormatVersion;
    return doc.dump(2) + "\n";
}

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin, std::string("malformed JSON: ") + e.what());
    }
}

Json load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string(), "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    auto j = parse_text(ss.str(), file.string());
    if (j.is_object() && j.contains("format_version") && j["format_version"] != kFormatVersion)
        throw ParseError("format_version", "unsupported version " + j["format_version"].dump());
    return j;
}

}  // namespace toda::io
