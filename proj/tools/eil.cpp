// eil: command-line front end for the edge-ideal invariant library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eil/census.hpp"
#include "eil/covers.hpp"
#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/graph_io.hpp"
#include "eil/homology.hpp"
#include "eil/matchings.hpp"
#include "eil/reproduce.hpp"
#include "eil/resolutions.hpp"
#include "eil/structure.hpp"

namespace {

using nlohmann::json;
using namespace eil;

constexpr const char* kVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

// Raised for malformed input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string field = "gf2";
    int budget_bits = kDefaultBudgetBits;
    std::uint64_t seed = 0;
    bool table = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

struct GraphInput {
    std::string graph6;
    std::string json_file;
    bool stdin_flag = false;
};

void add_graph_options(CLI::App* sub, GraphInput& in) {
    sub->add_option("--graph6", in.graph6, "graph6 string");
    sub->add_option("--json-file", in.json_file, "JSON edge list {\"n\":..,\"edges\":[[u,v],..]}, 1-indexed");
    sub->add_flag("--stdin", in.stdin_flag, "read graph6 or JSON from stdin (the default when nothing else is given)");
}

Graph load_graph(const GraphInput& in) {
    try {
        if (!in.graph6.empty()) return parse_graph6(in.graph6);
        if (!in.json_file.empty()) {
            std::ifstream f(in.json_file);
            if (!f) throw UsageError("cannot open " + in.json_file);
            const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
            return parse_edge_json(text);
        }
        const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        const auto start = text.find_first_not_of(" \t\r\n");
        if (start == std::string::npos) throw UsageError("no graph given (use --graph6, --json-file or stdin)");
        if (text[start] == '{') return parse_edge_json(text);
        return parse_graph6(text);
    } catch (const InvalidInput& e) {
        throw UsageError(std::string("malformed graph input: ") + e.what());
    }
}

// Bad parameters on the command line are usage errors, not computation errors.
template <typename F>
auto usage_on_invalid(F&& f) {
    try {
        return f();
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
}

json one_based(VertexSet s) {
    json out = json::array();
    for (int v : s) out.push_back(v + 1);
    return out;
}

json one_based(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u + 1, e.v + 1});
    return out;
}

json decomposition_json(const DimDecomposition& d) {
    json pairs = json::array();
    for (const MatchedPair& p : d.pairs) pairs.push_back({p.x1 + 1, p.x2 + 1});
    return {{"W", one_based(d.w)}, {"pairs", pairs}, {"m1", d.m1}, {"m2", d.m2}, {"W0", one_based(d.w0)}};
}

std::vector<DimDecomposition> decompositions(const Graph& g, int only) {
    const auto dims = enumerate_dims(g).dims;
    if (dims.empty()) throw PreconditionError("graph has no dominating induced matching");
    std::vector<DimDecomposition> out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (only >= 0 && static_cast<std::size_t>(only) != i) continue;
        out.push_back(dim_decomposition(g, dims[i]));
    }
    if (out.empty()) throw UsageError("--dim index out of range (graph has " + std::to_string(dims.size()) + " DIMs)");
    return out;
}

std::string render_table(const json& j, int indent = 0) {
    std::ostringstream os;
    const std::string pad(indent, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            os << pad << it.key() << ":\n" << render_table(*it, indent + 2);
        } else if (it->is_string()) {
            const std::string s = it->get<std::string>();
            if (s.find('\n') != std::string::npos) {
                os << pad << it.key() << ":\n" << s;
            } else {
                os << pad << it.key() << ": " << s << "\n";
            }
        } else {
            os << pad << it.key() << ": " << it->dump() << "\n";
        }
    }
    return os.str();
}

class Runner {
public:
    Runner(const Globals& g, std::string command) : globals_(g), command_(std::move(command)) {}

    Field field() const {
        try {
            return Field::parse(globals_.field);
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
    }

    void emit(const std::optional<Graph>& g, json result) const {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        json report{{"schema_version", kSchemaVersion},
                    {"command", command_},
                    {"field", globals_.field},
                    {"version", kVersion},
                    {"timing_ms", ms},
                    {"result", std::move(result)}};
        if (g) report["graph6"] = write_graph6(*g);
        if (globals_.table) {
            std::cout << render_table(report);
        } else {
            std::cout << report.dump(2) << "\n";
        }
    }

private:
    const Globals& globals_;
    std::string command_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run(int argc, char** argv) {
    CLI::App app{"Matching numbers, regularity and Cohen-Macaulay tests for edge ideals of small graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--field", globals.field, "coefficient field: gf2, gfp:<p> or rat")->capture_default_str();
    app.add_option("--budget-bits", globals.budget_bits, "largest vertex count for exponential sweeps")
        ->capture_default_str();
    app.add_option("--seed", globals.seed, "seed offset for randomised commands");
    auto* json_flag = app.add_flag("--json", "JSON output (default)");
    app.add_flag("--table", globals.table, "human-readable output")->excludes(json_flag);
    app.add_option("--threads", globals.threads, "worker count (computations currently run on one thread)");

    GraphInput in;
    int dim_index = -1;
    std::string strategy = "direct";
    std::string order_preset = "sorted";
    int order_k = 2;
    std::string format = "graph6";
    std::vector<std::string> family_words;
    int census_n = 7;
    bool theorem_v = false;
    std::string claim_id;
    bool all_claims = false;
    ClaimOptions claim_opts;

    auto graph_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        add_graph_options(sub, in);
        return sub;
    };
    graph_cmd("invariants", "ind-match, min-match, match and reg with witnesses");
    auto* dim = graph_cmd("dim", "enumerate dominating induced matchings");
    dim->add_option("--strategy", strategy, "direct or independent-set")->check(CLI::IsMember({"direct", "independent-set"}));
    graph_cmd("partition", "vertex partition certifying ind-match = min-match");
    graph_cmd("unmixed", "unmixedness via minimal vertex covers");
    auto* flat = graph_cmd("flat", "condition (flat) for every M2 candidate of a DIM decomposition");
    flat->add_option("--dim", dim_index, "0-based index of the DIM to use (default: all)");
    graph_cmd("reg", "regularity and the induced-subgraph lower bound");
    graph_cmd("betti", "graded Betti numbers by Hochster's formula");
    graph_cmd("cm", "Cohen-Macaulay test (Reisner)");
    graph_cmd("scm", "sequentially Cohen-Macaulay test (Duval)");
    graph_cmd("vd", "vertex decomposability and shedding vertices");
    auto* chordal = graph_cmd("chordal", "chordality and the collapsed graph of each DIM");
    chordal->add_option("--dim", dim_index, "0-based index of the DIM to use (default: all)");
    auto* classify = graph_cmd("classify", "pair types (i)-(iv), CM criterion, Cameron-Walker test");
    classify->add_option("--dim", dim_index, "0-based index of the DIM to use (default: all)");
    auto* lyu = graph_cmd("lyubeznik", "Lyubeznik symbols and Betti numbers of the edge ideal");
    lyu->add_option("--order", order_preset, "sorted or hk-prime (graph defaults to HkPrime{k}; a given graph must equal it)")
        ->check(CLI::IsMember({"sorted", "hk-prime"}));
    lyu->add_option("--k", order_k, "k for --order hk-prime");

    auto* family = app.add_subcommand("family", "build a named family member, e.g. `family Hk 3`");
    family->add_option("family", family_words, "family name and parameters")->required();
    family->add_option("--format", format, "graph6, json or dot")->check(CLI::IsMember({"graph6", "json", "dot"}));

    auto* census = app.add_subcommand("census", "connected graphs up to isomorphism, one graph6 per line");
    census->add_option("--n", census_n, "largest vertex count")->check(CLI::Range(1, 8))->capture_default_str();
    census->add_flag("--theorem-v", theorem_v, "report graphs with match = reg > ind-match instead");

    auto* reproduce = app.add_subcommand("reproduce", "run a named acceptance check");
    reproduce->add_option("claim", claim_id, "claim id");
    reproduce->add_flag("--all", all_claims, "run every claim");
    reproduce->add_option("--k", claim_opts.k, "k for lemma-Hk");
    reproduce->add_option("--a", claim_opts.a, "a for lemma-gab");
    reproduce->add_option("--b", claim_opts.b, "b for lemma-gab");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    Runner out(globals, cmd);

    if (cmd == "family") {
        const Graph g = usage_on_invalid([&] { return build(parse_family(family_words)); });
        if (format == "graph6") std::cout << write_graph6(g) << "\n";
        if (format == "json") std::cout << write_edge_json(g) << "\n";
        if (format == "dot") std::cout << write_dot(g);
        return 0;
    }
    if (cmd == "census") {
        if (theorem_v) {
            json per_field = json::object();
            bool only_c5 = true;
            const std::string c5 = canonical_form(cycle_graph(5)).graph6;
            for (const Field& f : {Field::gf2(), Field::rationals()}) {
                json found = json::array();
                const auto hits = verify_case_v_census(census_n, f);
                for (const Graph& g : hits) found.push_back(write_graph6(g));
                per_field[f.name()] = found;
                only_c5 = only_c5 && hits.size() == (census_n >= 5 ? 1u : 0u) &&
                          (hits.empty() || canonical_form(hits[0]).graph6 == c5);
            }
            out.emit(std::nullopt, {{"n_max", census_n}, {"graphs", per_field}, {"only_c5", only_c5}});
            return only_c5 ? 0 : 1;
        }
        for (const Graph& g : connected_graphs_up_to(census_n)) std::cout << write_graph6(g) << "\n";
        return 0;
    }
    if (cmd == "reproduce") {
        std::vector<std::string> ids;
        if (all_claims) {
            for (const ClaimInfo& c : claim_registry()) ids.push_back(c.id);
        } else if (!claim_id.empty()) {
            ids.push_back(claim_id);
        } else {
            throw UsageError("reproduce: give a claim id or --all");
        }
        claim_opts.seed = globals.seed;
        bool ok = true;
        json results = json::array();
        for (const std::string& id : ids) {
            ClaimResult r;
            try {
                r = run_claim(id, claim_opts);
            } catch (const InvalidInput& e) {
                throw UsageError(e.what());
            }
            ok = ok && r.passed;
            results.push_back({{"id", r.id},
                               {"title", r.title},
                               {"passed", r.passed},
                               {"failures", r.failures},
                               {"notes", r.notes},
                               {"seconds", r.seconds}});
        }
        out.emit(std::nullopt, {{"claims", results}, {"passed", ok}});
        return ok ? 0 : 1;
    }

    // The hk-prime preset names its own graph when none is given.
    const bool preset_graph = cmd == "lyubeznik" && order_preset == "hk-prime" && in.graph6.empty() &&
                              in.json_file.empty() && !in.stdin_flag;
    const Graph g = preset_graph ? usage_on_invalid([&] { return hk_prime_graph(order_k); }) : load_graph(in);
    const Field f = out.field();
    json r;
    if (cmd == "invariants") {
        r["order"] = g.order();
        r["size"] = g.size();
        r["ind_match"] = induced_matching_number(g);
        r["min_match"] = min_matching_number(g);
        r["match"] = matching_number(g);
        r["reg"] = regularity(g, f, globals.budget_bits);
        r["witnesses"] = {{"maximum_induced_matching", one_based(maximum_induced_matching(g))},
                          {"minimum_maximal_matching", one_based(minimum_maximal_matching(g))},
                          {"maximum_matching", one_based(maximum_matching(g))}};
    } else if (cmd == "dim") {
        const auto result = enumerate_dims(g, strategy == "direct" ? DimStrategy::Direct : DimStrategy::IndependentSet);
        json list = json::array();
        for (const Matching& m : result.dims) {
            list.push_back({{"edges", one_based(m.edges)}, {"decomposition", decomposition_json(dim_decomposition(g, m))}});
        }
        r = {{"count", result.dims.size()}, {"truncated", result.truncated}, {"dims", list}};
    } else if (cmd == "partition") {
        const auto p = eq_partition(g);
        r["ind_match"] = induced_matching_number(g);
        r["min_match"] = min_matching_number(g);
        if (!p) {
            r["partition"] = nullptr;
        } else {
            json v = json::array(), tagged = json::array();
            for (auto [a, b] : p->v) v.push_back({a + 1, b + 1});
            for (const TaggedEdge& t : p->e_prime) {
                tagged.push_back({{"edge", {t.edge.u + 1, t.edge.v + 1}}, {"type", static_cast<int>(t.type)}});
            }
            json z = json::array(), w = json::array();
            for (int x : p->z) z.push_back(x + 1);
            for (int x : p->w) w.push_back(x + 1);
            r["partition"] = {{"alpha", p->alpha}, {"beta", p->beta}, {"gamma", p->gamma}, {"v", v},
                              {"z", z},           {"w", w},           {"e_prime", tagged}};
            r["verified"] = verify_eq_partition(g, *p);
        }
    } else if (cmd == "unmixed") {
        json covers = json::array();
        for (VertexSet c : minimal_vertex_covers(g)) covers.push_back(one_based(c));
        r = {{"unmixed", is_unmixed(g)}, {"height", height(g)}, {"minimal_vertex_covers", covers}};
    } else if (cmd == "flat") {
        json per = json::array();
        for (const DimDecomposition& d : decompositions(g, dim_index)) {
            const FlatReport rep = flat_check(g, d);
            json recs = json::array();
            for (const FlatRecord& x : rep.records) {
                recs.push_back({{"M2", one_based(x.m2)},
                                {"N_M2", one_based(x.n_m2)},
                                {"m2_prime", x.m2_prime},
                                {"IN", one_based(x.in)},
                                {"flat1", {x.flat1_lhs, x.flat1_rhs, x.flat1()}},
                                {"flat2", {x.flat2_lhs, x.flat2_rhs, x.flat2()}}});
            }
            per.push_back({{"decomposition", decomposition_json(d)}, {"holds", rep.holds}, {"records", recs}});
        }
        r = {{"unmixed", is_unmixed(g)}, {"decompositions", per}};
    } else if (cmd == "reg") {
        const WoodroofeWitness w = woodroofe_witness(g, globals.budget_bits);
        r = {{"reg", regularity(g, f, globals.budget_bits)},
             {"lower_bound", w.bound},
             {"lower_bound_witness", {{"vertices", one_based(w.vertices)}, {"cycle_lengths", w.cycle_lengths}}}};
    } else if (cmd == "betti") {
        const BettiTable t = hochster_betti(g, f, globals.budget_bits);
        if (globals.table) {
            r = {{"betti", t.grid()}};
        } else {
            r = json::parse(t.to_json());
        }
    } else if (cmd == "cm") {
        r = {{"cohen_macaulay", reisner_cm(g, f, globals.budget_bits)}, {"unmixed", is_unmixed(g)}};
    } else if (cmd == "scm") {
        r = {{"sequentially_cohen_macaulay", duval_scm(g, f, globals.budget_bits)}};
    } else if (cmd == "vd") {
        json shedding = json::array();
        for (int v = 0; v < g.order(); ++v) {
            if (is_shedding_vertex(g, v)) shedding.push_back(v + 1);
        }
        r = {{"vertex_decomposable", is_vertex_decomposable(g)}, {"shedding_vertices", shedding}};
    } else if (cmd == "chordal") {
        r["chordal"] = is_chordal(g);
        json tilde = json::array();
        if (has_dominating_induced_matching(g)) {
            for (const DimDecomposition& d : decompositions(g, dim_index)) {
                const Graph t = tilde_graph(g, d);
                tilde.push_back({{"decomposition", decomposition_json(d)},
                                 {"tilde_graph6", write_graph6(t)},
                                 {"forest", is_forest(t)}});
            }
        }
        r["tilde"] = tilde;
    } else if (cmd == "classify") {
        json triangles = json::array();
        for (const PendantTriangle& t : pendant_triangles(g)) triangles.push_back({t.apex + 1, t.v1 + 1, t.v2 + 1});
        r["cameron_walker"] = is_cameron_walker(g);
        r["pendant_triangles"] = triangles;
        json per = json::array();
        if (has_dominating_induced_matching(g)) {
            for (const DimDecomposition& d : decompositions(g, dim_index)) {
                const DimVdClassification c = dimvd_class_check(g, d);
                json tags = json::array();
                for (std::size_t j = 0; j < c.pairs.size(); ++j) {
                    json wit = json::array();
                    for (int y : c.pairs[j].witnesses) wit.push_back(y + 1);
                    tags.push_back({{"pair", {d.pairs[j].x1 + 1, d.pairs[j].x2 + 1}},
                                    {"tag", to_string(c.pairs[j].tag)},
                                    {"witnesses", wit}});
                }
                json entry{{"decomposition", decomposition_json(d)}, {"in_class", c.in_class}, {"pairs", tags}};
                if (c.in_class && is_connected(g) && !d.w.empty()) entry["cm_criterion"] = dimvd_cm_criterion(g, d);
                per.push_back(entry);
            }
        }
        r["decompositions"] = per;
    } else if (cmd == "lyubeznik") {
        std::vector<Edge> order;
        if (order_preset == "hk-prime") {
            if (!(g == hk_prime_graph(order_k))) throw UsageError("--order hk-prime needs the graph HkPrime{k}");
            order = hk_prime_order(order_k);
        }
        const MonomialList m = edge_monomials(g, order);
        json gens = json::array();
        for (VertexSet s : m.supports()) gens.push_back(one_based(s));
        json maximal = json::array();
        for (const LSymbol& s : maximal_l_admissible(m)) {
            json idx = json::array();
            for (int i : s.index_list()) idx.push_back(i + 1);
            maximal.push_back({{"indices", idx}, {"degree", s.degree()}});
        }
        const BettiTable t = lyubeznik_betti(m, f);
        r = {{"generators", gens},
             {"admissible_symbols", l_admissible_symbols(m).size()},
             {"maximal_symbols", maximal},
             {"betti", globals.table ? json(t.grid()) : json::parse(t.to_json())}};
    }
    out.emit(g, r);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const eil::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
