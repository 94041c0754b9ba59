#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "toda/random.hpp"
#include "toda/symbolic.hpp"

namespace toda::cli {

namespace {

using io::Json;

Ring parse_ring(const std::string& s) {
    if (s == "Z") return Ring::integers();
    std::string digits;
    if (s.rfind("F_", 0) == 0) digits = s.substr(2);
    else if (s.rfind("Fp:", 0) == 0) digits = s.substr(3);
    else if (s.rfind("F", 0) == 0) digits = s.substr(1);
    else throw InvalidInput("--ring: expected Z, F<p>, F_<p> or Fp:<p>, got '" + s + "'");
    try {
        std::size_t used = 0;
        Scalar p = std::stoll(digits, &used);
        if (used == digits.size() && is_prime(p)) return Ring::prime_field(p);
    } catch (const std::exception&) {
    }
    throw InvalidInput("--ring: '" + s + "' does not name a prime field");
}

struct Globals {
    std::uint64_t seed = 0;
    std::string ring;
    std::size_t max_rank = 2;
    std::size_t max_stage = SearchPolicy{}.max_stage;
};

struct Policy {
    std::string enumerate = "all";
    std::size_t max_choices = SearchPolicy{}.max_choices;
    std::size_t max_nodes = SearchPolicy{}.max_nodes;

    SearchPolicy make(const Globals& g) const {
        SearchPolicy p;
        p.enumerate = enumerate == "first" ? Enumerate::First : Enumerate::All;
        p.max_choices = max_choices;
        p.max_nodes = max_nodes;
        p.max_stage = g.max_stage;
        return p;
    }
};

void add_policy(CLI::App* sub, Policy& p) {
    sub->add_option("--enumerate", p.enumerate, "Choice enumeration: all or first")
        ->check(CLI::IsMember({"all", "first"}));
    sub->add_option("--max-choices", p.max_choices, "Cap on enumerated choices per choice space");
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

private:
    io::Context context(const std::string& file) const {
        io::Context ctx;
        ctx.base = std::filesystem::path(file).parent_path();
        if (!g_.ring.empty()) ctx.ring = parse_ring(g_.ring);
        return ctx;
    }
    Json load(const std::string& file) const { return io::load(file); }
    TodaDiagramInput diagram(const std::string& file) const { return io::diagram_from_json(load(file), context(file)); }
    FilteredObject filtered(const std::string& file) const { return io::filtered_from_json(load(file), context(file)); }
    ChainMap map(const std::string& file, const std::string& path, ComplexPtr src, ComplexPtr tgt) const {
        try {
            return io::chain_map_from_json(load(file), context(file), "", std::move(src), std::move(tgt));
        } catch (const ParseError& e) {
            throw ParseError(path + " (" + file + ")", e.what());
        }
    }
    void emit(const Json& doc) { out_ << io::print(doc); }

    int cube_marker();
    int cube_classify();
    int bracket_triple();
    int bracket_higher();
    int rectify_cmd();
    int filtered_to_toda();
    int filtered_bracket();
    int filtered_spherical();
    int filtered_wedge();
    int render_dot_cmd();
    int generate_diagram();
    int generate_obstruction();

    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    Policy policy_;
    std::string index_, input_, alpha_, phi_, first_, last_, profile_, output_, w_, z_;
    std::size_t n_ = 0, length_ = 3;
    Scalar p_ = 3;
    bool all_values_ = false, oracle_check_ = false;
};

int Runner::cube_marker() {
    auto J = CubeIndex::parse(index_, Alphabet::Ternary);
    out_ << marker_decomposition(J).str() << "\n";
    return kOk;
}

int Runner::cube_classify() {
    auto J = CubeIndex::parse(index_, Alphabet::Ternary);
    out_ << describe(classify_vertex(J)) << "\n";
    return kOk;
}

int Runner::bracket_triple() {
    auto d = diagram(input_);
    if (d.maps.size() != 3) throw InvalidInput("bracket triple: expected 3 maps, found " + std::to_string(d.maps.size()));
    d.validate();
    auto pol = policy_.make(g_);
    auto b = triple_bracket(d.maps[0], d.maps[1], d.maps[2], pol);
    Json doc = io::bracket_to_json(b);
    if (!all_values_) doc.erase("values");
    int code = kOk;
    if (oracle_check_) {
        auto o = massey_oracle(d.maps[0], d.maps[1], d.maps[2], pol);
        Json oj = io::oracle_to_json(o);
        if (!all_values_) oj.erase("values");
        const bool agrees = o.value_set == b.value_set;
        oj["agrees"] = agrees;
        doc["oracle"] = std::move(oj);
        if (!agrees) code = kCheckFailed;
    }
    emit(doc);
    if (code != kOk) err_ << "error[check]: engine and oracle value sets differ\n";
    return code;
}

int Runner::bracket_higher() {
    auto d = diagram(input_);
    if (n_ != 0 && d.maps.size() != n_ + 1)
        throw InvalidInput("bracket higher: --n " + std::to_string(n_) + " needs " + std::to_string(n_ + 1) +
                           " maps, found " + std::to_string(d.maps.size()));
    d.validate();
    auto b = higher_bracket(d.maps, policy_.make(g_));
    Json doc = io::bracket_to_json(b);
    if (!all_values_) doc.erase("values");
    emit(doc);
    return kOk;
}

int Runner::rectify_cmd() {
    auto d = diagram(input_);
    auto r = rectify(d, policy_.make(g_));
    emit(io::rectify_to_json(r));
    if (!r.success && r.search_exhausted) {
        err_ << "error[exhausted]: no strictification found within the search caps; obstruction not proven\n";
        return kSearchExhausted;
    }
    return kOk;
}

int Runner::filtered_to_toda() {
    auto X = filtered(input_);
    const Ring& R = X.top()->ring();
    auto zero = make_complex(ChainComplex(R));
    ChainMap a = alpha_.empty() ? ChainMap::zero(zero, X.top()) : map(alpha_, "alpha", nullptr, X.top());
    ChainMap f = phi_.empty() ? ChainMap::zero(X.top(), zero) : map(phi_, "phi", X.top(), nullptr);
    emit(io::diagram_to_json(to_toda_diagram(X, a, f)));
    return kOk;
}

int Runner::filtered_bracket() {
    auto X = filtered(input_);
    auto a = map(alpha_, "alpha", nullptr, X.top());
    auto f = map(phi_, "phi", X.top(), nullptr);
    std::optional<ChainMap> first, last;
    if (!first_.empty()) first = map(first_, "first", a.source(), X.quotients.back());
    if (!last_.empty()) last = map(last_, "last", X.stages.front(), f.target());
    auto gb = generalized_bracket(X, a, f, first, last);
    Json doc;
    doc["kind"] = "generalized_bracket";
    doc["length"] = X.length() + 1;
    doc["value"] = io::element_to_json(gb.value);
    doc["group_orders"] = gb.group_orders;
    doc["is_zero"] = gb.is_zero;
    emit(doc);
    return kOk;
}

int Runner::filtered_spherical() {
    SphericalProfile p;
    if (!profile_.empty()) {
        p = SphericalProfile::parse(profile_);
    } else if (!input_.empty()) {
        auto X = filtered(input_);
        auto ctx = context(input_);
        auto zero = make_complex(ChainComplex(X.top()->ring()));
        auto W = w_.empty() ? zero : io::complex_from_json(load(w_), context(w_), "W");
        auto Z = z_.empty() ? zero : io::complex_from_json(load(z_), context(z_), "Z");
        p = profile(X, W, Z);
    } else {
        throw InvalidInput("filtered spherical-check: give --profile or --input");
    }
    auto rep = spherical_check(p);
    Json doc;
    doc["kind"] = "spherical_check";
    doc["profile"] = p.str();
    doc["spherical"] = rep.spherical;
    if (!rep.spherical) doc["violation"] = rep.message;
    emit(doc);
    return kOk;
}

int Runner::filtered_wedge() {
    auto X = filtered(input_);
    auto rep = sphere_wedge_triviality_check(X);
    Json doc;
    doc["kind"] = "sphere_wedge_check";
    doc["trivial"] = rep.trivial;
    doc["pairs_checked"] = rep.pairs_checked;
    if (!rep.trivial) doc["violation"] = rep.message;
    emit(doc);
    return kOk;
}

int Runner::render_dot_cmd() {
    auto d = diagram(input_);
    auto r = rectify(d, policy_.make(g_));
    if (!r.success)
        throw PreconditionError("render: the diagram does not strictify (obstruction at stage " +
                                std::to_string(r.stage) + ")");
    auto E = extend_cube(strictify_strict(r.strict.maps).hat);
    auto dot = render_dot(E);
    if (output_.empty() || output_ == "-") {
        out_ << dot;
    } else {
        std::ofstream f(output_);
        if (!f) throw InvalidInput("render: cannot write " + output_);
        f << dot;
    }
    return kOk;
}

int Runner::generate_diagram() {
    Rng rng(g_.seed);
    Ring R = g_.ring.empty() ? Ring::integers() : parse_ring(g_.ring);
    RandomShape shape;
    shape.max_rank = g_.max_rank;
    TodaDiagramInput d{random_toda_diagram(R, rng, length_, shape), {}};
    emit(io::diagram_to_json(d));
    return kOk;
}

int Runner::generate_obstruction() {
    if (p_ < 2) throw InvalidInput("generate obstruction: --p must be at least 2");
    const Ring Z = Ring::integers();
    auto A0 = make_complex(ChainComplex::concentrated(Z, 0, 1));
    auto A2 = make_complex(ChainComplex(Z, 0, {1, 1}, {Matrix(0, 1), Matrix{{p_}}}));
    auto A3 = make_complex(ChainComplex::concentrated(Z, 1, 1));
    TodaDiagramInput d{{ChainMap(A0, A0, {{0, Matrix{{p_}}}}), ChainMap(A0, A2, {{0, Matrix{{1}}}}),
                        ChainMap(A2, A3, {{1, Matrix{{1}}}})},
                       {}};
    emit(io::diagram_to_json(d));
    return kOk;
}

int Runner::run(const std::vector<std::string>& args) {
    CLI::App app{"Toda brackets and rectification of chain-complex diagrams", "toda"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g_.seed, "Seed for generated test data");
    app.add_option("--ring", g_.ring, "Coefficient ring: Z or F<p>; documents must match");
    app.add_option("--max-rank", g_.max_rank, "Largest rank per degree in generated complexes");
    app.add_option("--max-stage", g_.max_stage, "Largest bracket length searched");

    std::function<int()> action;
    auto bind = [&](CLI::App* sub, int (Runner::*fn)()) { sub->callback([&, fn] { action = [this, fn] { return (this->*fn)(); }; }); };

    auto* cube = app.add_subcommand("cube", "Cube index utilities");
    cube->require_subcommand(1);
    auto* marker = cube->add_subcommand("marker", "Marker, stage and remainder of a ternary index");
    marker->add_option("--index", index_, "Ternary digits, most significant first")->required();
    bind(marker, &Runner::cube_marker);
    auto* classify = cube->add_subcommand("classify", "Predicted homotopy type of E(J)");
    classify->add_option("--index", index_, "Ternary digits, most significant first")->required();
    bind(classify, &Runner::cube_classify);

    auto* bracket = app.add_subcommand("bracket", "Toda brackets of a diagram document");
    bracket->require_subcommand(1);
    auto* triple = bracket->add_subcommand("triple", "Triple bracket <f0, f1, f2>");
    triple->add_option("--input", input_, "Diagram document")->required();
    triple->add_flag("--all-values", all_values_, "List every value (finite rings)");
    triple->add_flag("--oracle-check", oracle_check_, "Compare with the direct nullhomotopy computation");
    add_policy(triple, policy_);
    bind(triple, &Runner::bracket_triple);
    auto* higher = bracket->add_subcommand("higher", "Bracket <f0, ..., fn>");
    higher->add_option("--input", input_, "Diagram document")->required();
    higher->add_option("--n", n_, "Bracket length (number of maps minus one)");
    higher->add_flag("--all-values", all_values_, "List every value (finite rings)");
    add_policy(higher, policy_);
    bind(higher, &Runner::bracket_higher);

    auto* rect = app.add_subcommand("rectify", "Strictify a diagram or report the obstruction");
    rect->add_option("--input", input_, "Diagram document")->required();
    add_policy(rect, policy_);
    rect->add_option("--max-nodes", policy_.max_nodes, "Search node budget");
    bind(rect, &Runner::rectify_cmd);

    auto* filt = app.add_subcommand("filtered", "Filtered objects");
    filt->require_subcommand(1);
    auto* toda = filt->add_subcommand("to-toda", "Induced Toda diagram of a filtered object");
    toda->add_option("--input", input_, "Filtered object document")->required();
    toda->add_option("--alpha", alpha_, "Map W -> X (default: from the zero complex)");
    toda->add_option("--phi", phi_, "Map X -> Z (default: to the zero complex)");
    bind(toda, &Runner::filtered_to_toda);
    auto* fb = filt->add_subcommand("bracket", "Generalized bracket value phi alpha");
    fb->add_option("--input", input_, "Filtered object document")->required();
    fb->add_option("--alpha", alpha_, "Map W -> X")->required();
    fb->add_option("--phi", phi_, "Map X -> Z")->required();
    fb->add_option("--first", first_, "Expected class of the first map W -> C_l");
    fb->add_option("--last", last_, "Expected class of the last map X_0 -> Z");
    bind(fb, &Runner::filtered_bracket);
    auto* sph = filt->add_subcommand("spherical-check", "Spherical filtration condition");
    sph->add_option("--profile", profile_, "c_-1,c_0,...,c_{l+1}; inf marks an acyclic entry");
    sph->add_option("--input", input_, "Filtered object document to measure");
    sph->add_option("--W", w_, "Complex W for the measured profile");
    sph->add_option("--Z", z_, "Complex Z for the measured profile");
    bind(sph, &Runner::filtered_spherical);
    auto* wedge = filt->add_subcommand("wedge-check", "Triviality certificate for zero-differential quotients");
    wedge->add_option("--input", input_, "Filtered object document")->required();
    bind(wedge, &Runner::filtered_wedge);

    auto* render = app.add_subcommand("render", "Rendering");
    render->require_subcommand(1);
    auto* dot = render->add_subcommand("dot", "DOT graph of the extended cube of a strictified diagram");
    dot->add_option("--input", input_, "Diagram document")->required();
    dot->add_option("-o,--output", output_, "Output file (default stdout)");
    add_policy(dot, policy_);
    bind(dot, &Runner::render_dot_cmd);

    auto* gen = app.add_subcommand("generate", "Test data");
    gen->require_subcommand(1);
    auto* gd = gen->add_subcommand("diagram", "Random Toda diagram (uses --seed, --ring, --max-rank)");
    gd->add_option("--length", length_, "Number of maps");
    bind(gd, &Runner::generate_diagram);
    auto* go = gen->add_subcommand("obstruction", "Integer diagram whose triple bracket misses zero");
    go->add_option("--p", p_, "Multiplier");
    bind(go, &Runner::generate_obstruction);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out_ << app.help();
            return kOk;
        }
        err_ << "error[usage]: " << e.what() << "\n" << app.help();
        return kParseError;
    }
    try {
        return action ? action() : kParseError;
    } catch (const ParseError& e) {
        err_ << "error[parse]: " << e.what() << "\n";
        return kParseError;
    } catch (const InvalidInput& e) {
        err_ << "error[input]: " << e.what() << "\n";
        return kParseError;
    } catch (const PreconditionError& e) {
        err_ << "error[precondition]: " << e.what() << "\n";
        return kPrecondition;
    } catch (const OverflowError& e) {
        err_ << "error[overflow]: " << e.what() << "\n";
        return kPrecondition;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Runner r(out, err);
    return r.run(args);
}

}  // namespace toda::cli
