#include "eil/reproduce.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "eil/census.hpp"
#include "eil/covers.hpp"
#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/graph_io.hpp"
#include "eil/homology.hpp"
#include "eil/matchings.hpp"
#include "eil/resolutions.hpp"
#include "eil/structure.hpp"

namespace eil {

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

class Claim {
public:
    explicit Claim(ClaimResult& r) : r_(r) {}

    bool expect(bool ok, const std::string& what) {
        if (!ok) {
            r_.passed = false;
            if (r_.failures.size() < kMaxReportedFailures) r_.failures.push_back(what);
        }
        return ok;
    }
    void note(const std::string& text) { r_.notes.push_back(text); }

private:
    ClaimResult& r_;
};

std::string show(const Graph& g) { return write_graph6(g); }

template <typename T>
std::string got(const std::string& name, T actual, T expected) {
    std::ostringstream os;
    os << name << " = " << actual << ", expected " << expected;
    return os.str();
}

struct Invariants {
    int ind = 0;
    int reg = 0;
    int min = 0;
    int match = 0;
};

Invariants invariants(const Graph& g, const Field& field) {
    return {induced_matching_number(g), regularity(g, field), min_matching_number(g), matching_number(g)};
}

void check_invariants(Claim& c, const std::string& name, const Graph& g, const Invariants& want, bool with_reg,
                      const Field& field) {
    const Invariants have{induced_matching_number(g), with_reg ? regularity(g, field) : want.reg,
                          min_matching_number(g), matching_number(g)};
    c.expect(have.ind == want.ind, name + ": " + got("ind-match", have.ind, want.ind));
    c.expect(have.min == want.min, name + ": " + got("min-match", have.min, want.min));
    c.expect(have.match == want.match, name + ": " + got("match", have.match, want.match));
    if (with_reg) c.expect(have.reg == want.reg, name + " over " + field.name() + ": " + got("reg", have.reg, want.reg));
}

void family_tables(Claim& c, const ClaimOptions&) {
    int count = 0;
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (int n = 1; n <= 3; ++n) {
                for (int m = 0; m <= n; ++m) {
                    const std::string name = "Gabmn{" + std::to_string(a) + "," + std::to_string(b) + "," +
                                             std::to_string(m) + "," + std::to_string(n) + "}";
                    check_invariants(c, name, gabmn_graph(a, b, m, n), {a + b + 1, 0, a + b + n, 2 * a + b + n + m},
                                     false, Field::gf2());
                    ++count;
                }
            }
        }
    }
    for (auto [a, b] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
        const std::string name = "Gab{" + std::to_string(a) + "," + std::to_string(b) + "}";
        const Invariants want{a + b + 2, 2 * a + b + 2, 2 * a + 2 * b + 2, 2 * a + 2 * b + 3};
        for (const Field& f : {Field::gf2(), Field::rationals()}) check_invariants(c, name, gab_graph(a, b), want, true, f);
        ++count;
    }
    for (int k : {2, 3}) {
        const Invariants want{k, k + 1, 2 * k, 2 * k};
        for (const Field& f : {Field::gf2(), Field::rationals()}) {
            check_invariants(c, "H" + std::to_string(k), hk_graph(k), want, true, f);
        }
        ++count;
    }
    c.note(std::to_string(count) + " family instances checked");
}

Graph small_cameron_walker() {
    // Edge {x, y}, a leaf at x, a pendant triangle at y.
    const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {3, 4}};
    return Graph::from_edges(5, e);
}

void eight_cases(Claim& c, const ClaimOptions& opt) {
    using Pattern = std::function<bool(const Invariants&)>;
    struct Case {
        std::string label;
        Pattern pattern;
        std::vector<std::pair<std::string, Graph>> witnesses;
    };
    std::vector<Case> cases;
    cases.push_back({"(i) ind = reg = min = match",
                     [](const Invariants& v) { return v.ind == v.reg && v.reg == v.min && v.min == v.match; },
                     {{"Cameron-Walker", small_cameron_walker()},
                      {"random Cameron-Walker", random_cameron_walker(opt.seed + 7, 10)}}});
    cases.push_back({"(ii) ind = reg = min < match",
                     [](const Invariants& v) { return v.ind == v.reg && v.reg == v.min && v.min < v.match; },
                     {{"P6", path_graph(6)}, {"P12", path_graph(12)}}});
    cases.push_back({"(iii) ind = reg < min = match",
                     [](const Invariants& v) { return v.ind == v.reg && v.reg < v.min && v.min == v.match; },
                     {{"K4", complete_graph(4)}, {"K5", complete_graph(5)}, {"K6", complete_graph(6)}}});
    cases.push_back({"(iv) ind = reg < min < match",
                     [](const Invariants& v) { return v.ind == v.reg && v.reg < v.min && v.min < v.match; },
                     {{"W(K3)", whiskered_complete(3)}, {"W(K4)", whiskered_complete(4)},
                      {"W(K5)", whiskered_complete(5)}}});
    cases.push_back({"(v) ind < reg = min = match",
                     [](const Invariants& v) { return v.ind < v.reg && v.reg == v.min && v.min == v.match; },
                     {{"C5", cycle_graph(5)}}});
    cases.push_back({"(vi) ind < reg = min < match",
                     [](const Invariants& v) { return v.ind < v.reg && v.reg == v.min && v.min < v.match; },
                     {{"Gab{1,0}", gab_graph(1, 0)}}});
    cases.push_back({"(vii) ind < reg < min = match",
                     [](const Invariants& v) { return v.ind < v.reg && v.reg < v.min && v.min == v.match; },
                     {{"H2", hk_graph(2)}, {"H3", hk_graph(3)}}});
    cases.push_back({"(viii) ind < reg < min < match",
                     [](const Invariants& v) { return v.ind < v.reg && v.reg < v.min && v.min < v.match; },
                     {{"Gab{1,1}", gab_graph(1, 1)}}});
    for (const Case& k : cases) {
        for (const auto& [name, g] : k.witnesses) {
            const Invariants v = invariants(g, Field::gf2());
            std::ostringstream os;
            os << k.label << ": " << name << " has ind=" << v.ind << " reg=" << v.reg << " min=" << v.min
               << " match=" << v.match;
            c.expect(k.pattern(v), os.str());
            c.note(os.str());
        }
    }
}

void prop_7vertex(Claim& c, const ClaimOptions&) {
    const auto census = connected_graphs_up_to(7);
    c.expect(census.size() == 996, got("connected graphs with <= 7 vertices", census.size(), std::size_t{996}));
    const std::string c5 = canonical_form(cycle_graph(5)).graph6;
    for (const Field& f : {Field::gf2(), Field::rationals()}) {
        const auto found = verify_case_v_census(7, f);
        std::string names;
        for (const Graph& g : found) names += show(g) + " ";
        c.expect(found.size() == 1 && canonical_form(found[0]).graph6 == c5,
                 "over " + f.name() + ": match = reg > ind holds for [" + names + "], expected only C5");
        c.note("over " + f.name() + ": " + std::to_string(found.size()) + " graph(s) found");
    }
}

void ind_eq_min(Claim& c, const ClaimOptions&) {
    int equal = 0;
    const auto census = connected_graphs_up_to(7);
    for (const Graph& g : census) {
        const bool eq = induced_matching_number(g) == min_matching_number(g);
        const auto p = eq_partition(g);
        c.expect(p.has_value() == eq, show(g) + ": partition presence disagrees with ind = min");
        if (p) c.expect(verify_eq_partition(g, *p), show(g) + ": partition does not verify");
        equal += eq ? 1 : 0;
    }
    c.note(std::to_string(equal) + " of " + std::to_string(census.size()) + " graphs have ind-match = min-match");
}

template <typename Body>
void for_each_census_dim(int n_max, Body&& body) {
    for (const Graph& g : connected_graphs_up_to(n_max)) {
        const auto dims = enumerate_dims(g).dims;
        if (dims.empty()) continue;
        body(g, dims);
    }
}

void unmixed_dim(Claim& c, const ClaimOptions&) {
    int graphs = 0, decompositions = 0, unmixed = 0;
    for_each_census_dim(kMaxCensusOrder, [&](const Graph& g, const std::vector<Matching>& dims) {
        const bool um = is_unmixed(g);
        ++graphs;
        unmixed += um ? 1 : 0;
        for (const Matching& m : dims) {
            ++decompositions;
            const bool flat = flat_check(g, dim_decomposition(g, m), true).holds;
            c.expect(flat == um, show(g) + ": condition (flat) gives " + (flat ? "true" : "false") +
                                     " but is_unmixed gives " + (um ? "true" : "false"));
        }
    });
    c.note(std::to_string(graphs) + " DIM graphs, " + std::to_string(decompositions) + " decompositions, " +
           std::to_string(unmixed) + " unmixed");
}

void chordal_tilde(Claim& c, const ClaimOptions&) {
    int graphs = 0, chordal = 0;
    for_each_census_dim(kMaxCensusOrder, [&](const Graph& g, const std::vector<Matching>& dims) {
        const bool ch = is_chordal(g);
        ++graphs;
        chordal += ch ? 1 : 0;
        for (const Matching& m : dims) {
            const bool forest = is_forest(tilde_graph(g, dim_decomposition(g, m)));
            c.expect(forest == ch, show(g) + ": chordal = " + (ch ? "true" : "false") + " but tilde forest = " +
                                       (forest ? "true" : "false"));
        }
    });
    c.note(std::to_string(graphs) + " DIM graphs, " + std::to_string(chordal) + " chordal");
}

void dim_vd(Claim& c, const ClaimOptions& opt) {
    int cm = 0;
    constexpr int kSamples = 500;
    for (int s = 0; s < kSamples; ++s) {
        const DimInstance inst = random_dimvd_graph(opt.seed + static_cast<std::uint64_t>(s), 12);
        const Graph& g = inst.graph;
        c.expect(is_vertex_decomposable(g), show(g) + ": in class but not vertex decomposable");
        const bool criterion = dimvd_cm_criterion(g, inst.decomposition);
        const bool reisner = reisner_cm(g, Field::gf2());
        c.expect(criterion == reisner, show(g) + ": criterion gives " + (criterion ? "CM" : "not CM") +
                                           ", Reisner over gf2 gives " + (reisner ? "CM" : "not CM"));
        cm += reisner ? 1 : 0;
    }
    c.note(std::to_string(kSamples) + " in-class graphs, " + std::to_string(cm) + " Cohen-Macaulay");
}

void named_examples(Claim& c, const ClaimOptions&) {
    const Field gf2 = Field::gf2(), q = Field::rationals();
    const Graph g0 = named_graph("G0"), g1 = named_graph("G1"), g2 = named_graph("G2"), g3 = named_graph("G3");
    const Graph p4 = named_graph("P4"), c6 = cycle_graph(6);
    c.expect(!has_dominating_induced_matching(g0), "G0 has a DIM");
    c.expect(induced_matching_number(g0) == 2 && min_matching_number(g0) == 2, "G0: ind-match or min-match is not 2");
    c.expect(matching_number(g0) == 3, "G0: match is not 3");
    c.expect(reisner_cm(p4, gf2), "P4 is not CM");
    c.expect(reisner_cm(g1, gf2) && reisner_cm(g1, q), "G1 is not CM");
    c.expect(is_unmixed(g1), "G1 is not unmixed");
    c.expect(is_unmixed(g2), "G2 is not unmixed");
    c.expect(!reisner_cm(g2, gf2), "G2 is CM over gf2");
    c.expect(!reisner_cm(g2, q), "G2 is CM over rat");
    c.expect(!is_unmixed(g3), "G3 is unmixed");
    c.expect(is_chordal(g3), "G3 is not chordal");
    c.expect(duval_scm(g3, gf2), "G3 is not sequentially CM over gf2");
    c.expect(has_dominating_induced_matching(c6), "C6 has no DIM");
    c.expect(!duval_scm(c6, gf2), "C6 is sequentially CM over gf2");
    c.expect(!is_vertex_decomposable(c6), "C6 is vertex decomposable");
}

void betti_cross(Claim& c, const ClaimOptions&) {
    std::vector<std::tuple<std::string, Graph, std::vector<Edge>>> cases;
    for (int k : {2, 3}) cases.emplace_back("H" + std::to_string(k) + "'", hk_prime_graph(k), hk_prime_order(k));
    for (const char* name : {"G0", "G1", "G2", "G3"}) cases.emplace_back(name, named_graph(name), std::vector<Edge>{});
    for (int n = 4; n <= 8; ++n) cases.emplace_back("P" + std::to_string(n), path_graph(n), std::vector<Edge>{});
    for (int n = 4; n <= 8; ++n) cases.emplace_back("C" + std::to_string(n), cycle_graph(n), std::vector<Edge>{});
    for (const Field& f : {Field::gf2(), Field::rationals()}) {
        for (const auto& [name, g, order] : cases) {
            const BettiTable h = hochster_betti(g, f);
            const BettiTable l = lyubeznik_betti(edge_monomials(g, order), f);
            c.expect(h == l, name + " over " + f.name() + ": Hochster and Lyubeznik tables differ");
            if (name == "H2'") c.expect(l.at(5, 8) != 0, "beta_{5,8}(H2') = 0 over " + f.name());
            if (name == "H3'") c.expect(l.at(7, 11) != 0, "beta_{7,11}(H3') = 0 over " + f.name());
        }
        const auto xi = hk_prime_xi(2);
        c.expect(witness_cycle_check(edge_monomials(hk_prime_graph(2), hk_prime_order(2)), f, xi, 5, 8),
                 "xi^(2) is not a nonzero class over " + f.name());
    }
    c.note(std::to_string(cases.size()) + " graphs cross-validated over gf2 and rat");
}

void property_suite(Claim& c, const ClaimOptions& opt) {
    constexpr int kSamples = 1000;
    int with_dim = 0;
    for (int s = 0; s < kSamples; ++s) {
        const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(s);
        const Graph g = random_graph(seed, 9);
        const Invariants v = invariants(g, Field::gf2());
        const std::string id = show(g) + ": ";
        c.expect(v.ind <= v.reg && v.reg <= v.min && v.min <= v.match && v.match <= 2 * v.min,
                 id + "ind <= reg <= min <= match <= 2 min fails");
        c.expect(reg_lower_bound_woodroofe(g) <= v.reg, id + "induced-subgraph lower bound exceeds reg");
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<std::vector<Edge>> split(parts);
        for (const Edge& e : g.edges()) split[std::uniform_int_distribution<int>(0, parts - 1)(rng)].push_back(e);
        c.expect(km_subadditivity_check(g, split, Field::gf2()), id + "subadditivity fails");
        if (has_dominating_induced_matching(g)) {
            ++with_dim;
            c.expect(v.ind == v.min, id + "has a DIM but ind-match != min-match");
        }
    }
    c.note(std::to_string(kSamples) + " random graphs, " + std::to_string(with_dim) + " with a DIM");
}

void lemma_hk(Claim& c, const ClaimOptions& opt) {
    const int k = opt.k;
    if (k < 2 || k > 5) throw InvalidInput("lemma-Hk: --k must lie in [2, 5]");
    for (const Field& f : {Field::gf2(), Field::rationals()}) {
        check_invariants(c, "H" + std::to_string(k), hk_graph(k), {k, k + 1, 2 * k, 2 * k}, true, f);
        const Graph hp = hk_prime_graph(k);
        const MonomialList m = edge_monomials(hp, hk_prime_order(k));
        c.expect(witness_cycle_check(m, f, hk_prime_xi(k), 2 * k + 1, 3 * k + 2),
                 "xi^(k) is not a nonzero class over " + f.name());
        c.expect(hochster_betti(hp, f).at(2 * k + 1, 3 * k + 2) != 0,
                 "beta_{2k+1,3k+2}(H_k') = 0 over " + f.name());
    }
}

void lemma_gab(Claim& c, const ClaimOptions& opt) {
    const int a = opt.a, b = opt.b;
    if (a < 0 || b < 0 || 1 + (a + b + 1) + 4 * (a + 1) + 3 * b > kDefaultBudgetBits) {
        throw InvalidInput("lemma-gab: --a/--b must be non-negative and keep the graph within 24 vertices");
    }
    const Invariants want{a + b + 2, 2 * a + b + 2, 2 * a + 2 * b + 2, 2 * a + 2 * b + 3};
    for (const Field& f : {Field::gf2(), Field::rationals()}) {
        check_invariants(c, "Gab{" + std::to_string(a) + "," + std::to_string(b) + "}", gab_graph(a, b), want, true, f);
    }
}

struct Entry {
    ClaimInfo info;
    std::function<void(Claim&, const ClaimOptions&)> body;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = {
        {{"family-tables", "golden invariant tables for Gabmn, Gab and Hk"}, family_tables},
        {{"eight-cases", "one witness per inequality pattern (i)-(viii)"}, eight_cases},
        {{"prop-7vertex", "match = reg > ind-match only for C5 up to 7 vertices"}, prop_7vertex},
        {{"ind-eq-min", "ind-match = min-match iff the partition exists, up to 7 vertices"}, ind_eq_min},
        {{"unmixed-dim", "condition (flat) iff unmixed, DIM graphs up to 8 vertices"}, unmixed_dim},
        {{"chordal-tilde", "chordal iff the collapsed graph is a forest, DIM graphs up to 8 vertices"}, chordal_tilde},
        {{"dim-vd", "in-class graphs are vertex decomposable; CM criterion matches Reisner"}, dim_vd},
        {{"named-examples", "named example graphs G0-G3, P4 and C6"}, named_examples},
        {{"betti-cross", "Hochster = Lyubeznik Betti tables and the xi^(2) witness"}, betti_cross},
        {{"property-suite", "inequalities and bounds on 1000 random graphs"}, property_suite},
        {{"lemma-Hk", "Hk invariants and the xi^(k) witness (--k)"}, lemma_hk},
        {{"lemma-gab", "Gab invariants (--a, --b)"}, lemma_gab},
    };
    return all;
}

} // namespace

std::vector<ClaimInfo> claim_registry() {
    std::vector<ClaimInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
}

ClaimResult run_claim(const std::string& id, const ClaimOptions& options) {
    for (const Entry& e : entries()) {
        if (e.info.id != id) continue;
        ClaimResult r;
        r.id = e.info.id;
        r.title = e.info.title;
        const auto start = std::chrono::steady_clock::now();
        Claim claim(r);
        e.body(claim, options);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw InvalidInput("unknown claim id '" + id + "'");
}

} // namespace eil
