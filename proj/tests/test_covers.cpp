#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "eil/census.hpp"
#include "eil/covers.hpp"
#include "eil/families.hpp"
#include "eil/matchings.hpp"
#include "oracles.hpp"

using namespace eil;

namespace {

std::vector<std::uint64_t> bits_of(const std::vector<VertexSet>& sets) {
    std::vector<std::uint64_t> out;
    for (VertexSet s : sets) out.push_back(s.bits());
    std::sort(out.begin(), out.end());
    return out;
}

DimDecomposition first_dim(const Graph& g) {
    const DimEnumeration e = enumerate_dims(g);
    REQUIRE_FALSE(e.dims.empty());
    return dim_decomposition(g, e.dims.front());
}

// Pair-vertex subsets meeting each pair at most once and avoiding leaves, by brute force.
std::size_t count_candidates(const Graph& g, const DimDecomposition& d) {
    const VertexSet matched = d.matched_vertices();
    std::size_t count = 0;
    for (std::uint64_t s = matched.bits();; s = (s - 1) & matched.bits()) {
        const VertexSet set(s);
        bool ok = true;
        for (int v : set) ok &= g.degree(v) >= 2;
        for (const MatchedPair& p : d.pairs) ok &= !(set.contains(p.x1) && set.contains(p.x2));
        count += ok ? 1 : 0;
        if (s == 0) break;
    }
    return count;
}

std::vector<DimInstance> dim_samples(int count, std::uint64_t seed0) {
    std::vector<DimInstance> out;
    for (int i = 0; i < count; ++i) out.push_back(random_dim_graph(seed0 + i, 10));
    return out;
}

} // namespace

TEST_CASE("maximal independent sets and minimal covers match the oracle") {
    std::mt19937_64 rng(3);
    std::vector<Graph> graphs = connected_graphs_up_to(6);
    for (int t = 0; t < 100; ++t) graphs.push_back(random_graph(rng(), 11));
    graphs.push_back(Graph(0));
    graphs.push_back(Graph(4));
    for (const Graph& g : graphs) {
        REQUIRE(bits_of(maximal_independent_sets(g)) == oracle::maximal_independent_sets(g));
        REQUIRE(bits_of(minimal_vertex_covers(g)) == oracle::minimal_vertex_covers(g));
    }
}

TEST_CASE("vertex cover examples") {
    const auto g3 = minimal_vertex_covers(named_graph("G3"));
    CHECK(std::find(g3.begin(), g3.end(), VertexSet{2, 3, 4, 5}) != g3.end());
    CHECK(std::find(g3.begin(), g3.end(), VertexSet{1, 2, 5}) != g3.end());

    const auto k2 = minimal_vertex_covers(path_graph(2));
    CHECK(k2 == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}});

    const auto c5 = minimal_vertex_covers(cycle_graph(5));
    CHECK(c5.size() == 5);
    for (VertexSet c : c5) CHECK(c.size() == 3);

    CHECK(is_vertex_cover(path_graph(3), VertexSet{1}));
    CHECK(is_minimal_vertex_cover(path_graph(3), VertexSet{1}));
    CHECK_FALSE(is_minimal_vertex_cover(path_graph(3), VertexSet{0, 1}));
    CHECK_FALSE(is_vertex_cover(path_graph(3), VertexSet{0}));
}

TEST_CASE("unmixedness and height") {
    CHECK(is_unmixed(named_graph("G2")));
    CHECK_FALSE(is_unmixed(named_graph("G3")));
    CHECK(is_unmixed(cycle_graph(5)));
    CHECK(height(cycle_graph(5)) == 3);
    CHECK_FALSE(is_unmixed(cycle_graph(6)));
    CHECK(height(Graph(3)) == 0);
}

TEST_CASE("cover C0") {
    const Graph p4 = named_graph("P4");
    const DimDecomposition d = first_dim(p4);
    CHECK(cover_C0(p4, d) == VertexSet{1, 2});

    const Graph k2 = path_graph(2);
    CHECK(cover_C0(k2, first_dim(k2)) == VertexSet{0});

    const Graph g1 = named_graph("G1");
    CHECK(cover_C0(g1, dim_decomposition(g1, std::vector<Edge>{{2, 3}, {4, 5}})) == VertexSet{2, 3, 4, 5});

    for (const DimInstance& inst : dim_samples(200, 100)) {
        const VertexSet c0 = cover_C0(inst.graph, inst.decomposition);
        REQUIRE(is_minimal_vertex_cover(inst.graph, c0));
        REQUIRE(c0.size() == inst.decomposition.m1 + 2 * inst.decomposition.m2);
    }
}

TEST_CASE("M2 candidates") {
    const Graph k2 = path_graph(2);
    CHECK(m2_candidates(k2, first_dim(k2)) == std::vector<VertexSet>{VertexSet{}});

    const Graph p4 = named_graph("P4");
    CHECK(m2_candidates(p4, first_dim(p4)) == std::vector<VertexSet>{VertexSet{}, VertexSet{1}, VertexSet{2}});

    const Graph c6 = cycle_graph(6);
    const DimDecomposition d6 = first_dim(c6);
    REQUIRE(d6.m2 == 2);
    CHECK(m2_candidates(c6, d6).size() == 9);

    for (const DimInstance& inst : dim_samples(200, 500)) {
        const auto cands = m2_candidates(inst.graph, inst.decomposition);
        REQUIRE(cands.size() == count_candidates(inst.graph, inst.decomposition));
        REQUIRE(std::is_sorted(cands.begin(), cands.end(), BySizeThenBits{}));
        REQUIRE(cands.front().empty());
    }
}

TEST_CASE("IN sets") {
    const Graph p4 = named_graph("P4");
    const DimDecomposition d = first_dim(p4);
    CHECK(in_set(p4, d, VertexSet{}).empty());
    CHECK(in_set(p4, d, VertexSet{2}) == VertexSet{0});

    const Graph c6 = cycle_graph(6);
    const DimDecomposition d6 = dim_decomposition(c6, std::vector<Edge>{{0, 1}, {3, 4}});
    REQUIRE(d6.w == VertexSet{2, 5});
    // G minus N[1] (1-based) is the path 3-4-5, so nothing in W_0 is isolated.
    CHECK(in_set(c6, d6, VertexSet{0}).empty());
    CHECK(in_set(c6, d6, VertexSet{0, 4}) == VertexSet{2});
}

TEST_CASE("I-set counts the pairs lost from m2") {
    const Graph p4 = named_graph("P4");
    const DimDecomposition d = first_dim(p4);
    CHECK(i_set(p4, d, VertexSet{}).empty());
    CHECK(i_set(p4, d, VertexSet{1}) == std::vector<int>{0});

    for (const DimInstance& inst : dim_samples(300, 900)) {
        const Graph& g = inst.graph;
        const DimDecomposition& dd = inst.decomposition;
        for (VertexSet m2 : m2_candidates(g, dd)) {
            // m2' straight from G' = G minus N[M2]
            const oracle::Adj a(g);
            std::uint64_t removed = 0;
            for (int x : m2) removed |= oracle::closed_nbhd(a, x, ~0ULL);
            int m2p = 0;
            for (const MatchedPair& p : dd.pairs) {
                if ((removed >> p.x1 & 1) || (removed >> p.x2 & 1)) continue;
                int d1 = 0, d2 = 0;
                for (int u = 0; u < a.n; ++u) {
                    if (removed >> u & 1) continue;
                    d1 += a.a[p.x1][u] ? 1 : 0;
                    d2 += a.a[p.x2][u] ? 1 : 0;
                }
                m2p += (d1 >= 2 && d2 >= 2) ? 1 : 0;
            }
            REQUIRE(m2_prime(g, dd, m2) == m2p);
            REQUIRE(static_cast<int>(i_set(g, dd, m2).size()) == dd.m2 - m2p);
        }
    }
}

TEST_CASE("flat check examples") {
    const Graph p4 = named_graph("P4");
    CHECK(flat_check(p4, first_dim(p4)).holds);

    const Graph g2 = named_graph("G2");
    CHECK(flat_check(g2, first_dim(g2)).holds);

    const Graph c6 = cycle_graph(6);
    const FlatReport r = flat_check(c6, first_dim(c6));
    CHECK_FALSE(r.holds);
    REQUIRE(r.first_violation.has_value());
    CHECK((!r.first_violation->flat1() || !r.first_violation->flat2()));
    CHECK(r.records.size() == 9);
    const FlatReport quick = flat_check(c6, first_dim(c6), true);
    CHECK(quick.records.size() <= r.records.size());
    CHECK(quick.first_violation->m2 == r.first_violation->m2);
}

TEST_CASE("flat condition characterises unmixed DIM graphs (census up to 7)") {
    int dim_graphs = 0;
    for (const Graph& g : connected_graphs_up_to(7)) {
        const DimEnumeration e = enumerate_dims(g);
        if (e.dims.empty()) continue;
        ++dim_graphs;
        const bool unmixed = is_unmixed(g);
        for (const Matching& m : e.dims) {
            const DimDecomposition d = dim_decomposition(g, m);
            REQUIRE(flat_check(g, d).holds == unmixed);
            if (unmixed) {
                REQUIRE(d.w0.size() <= 2 * d.m2);
                REQUIRE(2 * height(g) >= d.w0.size() + 2 * d.m());
            }
        }
    }
    CHECK(dim_graphs > 100);
}

TEST_CASE("minimal covers restrict to G minus N[x]") {
    for (const DimInstance& inst : dim_samples(150, 4000)) {
        const Graph& g = inst.graph;
        const auto covers = minimal_vertex_covers(g);
        for (int x : inst.decomposition.matched_vertices()) {
            if (g.degree(x) < 2) continue;
            const VertexSet closed = closed_neighborhood(g, VertexSet{x});
            const InducedSubgraph rest = induced_subgraph(g, g.vertices() - closed);
            for (VertexSet c : covers) {
                if (c.contains(x)) continue;
                VertexSet mapped;
                for (int i = 0; i < rest.graph.order(); ++i) {
                    if (c.contains(rest.to_parent[i])) mapped.insert(i);
                }
                REQUIRE(is_minimal_vertex_cover(rest.graph, mapped));
            }
        }
    }
}
