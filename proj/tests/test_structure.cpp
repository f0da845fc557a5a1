#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eil/census.hpp"
#include "eil/covers.hpp"
#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/homology.hpp"
#include "eil/matchings.hpp"
#include "eil/structure.hpp"
#include "oracles.hpp"

using namespace eil;

namespace {

Graph from(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Triangle y-a-b with the path y-l-l': pairs (a,b) and (l,l'), W = {y}.
Graph triangle_with_tail() { return from(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}}); }
Graph bowtie() { return from(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

bool chordal_oracle(const Graph& g) {
    // Some induced cycle of length >= 4 exists iff not chordal; check every vertex subset.
    const int n = g.order();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const VertexSet w(s);
        if (w.size() < 4) continue;
        const InducedSubgraph h = induced_subgraph(g, w);
        bool cycle = is_connected(h.graph);
        for (int v = 0; v < h.graph.order() && cycle; ++v) cycle = h.graph.degree(v) == 2;
        if (cycle) return false;
    }
    return true;
}

} // namespace

TEST_CASE("chordality") {
    for (int n = 1; n <= 6; ++n) CHECK(is_chordal(complete_graph(n)));
    CHECK_FALSE(is_chordal(cycle_graph(5)));
    CHECK(is_chordal(named_graph("G3")));
    CHECK_FALSE(is_chordal(named_graph("G1")));
    CHECK(is_chordal(Graph(0)));
    for (const Graph& g : connected_graphs_up_to(6)) REQUIRE(is_chordal(g) == chordal_oracle(g));
}

TEST_CASE("tilde graphs") {
    const Graph p4 = named_graph("P4");
    const Graph t4 = tilde_graph(p4, dim_decomposition(p4, std::vector<Edge>{{1, 2}}));
    CHECK(t4.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(is_forest(t4));

    const Graph c6 = cycle_graph(6);
    const Graph t6 = tilde_graph(c6, dim_decomposition(c6, std::vector<Edge>{{0, 1}, {3, 4}}));
    CHECK(t6.order() == 4);
    CHECK(t6.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(t6.degree(v) == 2);
    CHECK_FALSE(is_forest(t6));
    CHECK_FALSE(is_chordal(c6));

    const Graph g1 = named_graph("G1");
    const Graph t1 = tilde_graph(g1, dim_decomposition(g1, std::vector<Edge>{{2, 3}, {4, 5}}));
    // 1 - x_1 - 2 - x_2 - 1
    CHECK(t1.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(is_forest(t1));

    CHECK(is_forest(Graph(3)));
    CHECK(is_forest(path_graph(5)));
    CHECK_FALSE(is_forest(cycle_graph(3)));
}

TEST_CASE("chordal iff the tilde graph is a forest (census up to 7)") {
    for (const Graph& g : connected_graphs_up_to(7)) {
        for (const Matching& m : enumerate_dims(g).dims) {
            REQUIRE(is_chordal(g) == is_forest(tilde_graph(g, dim_decomposition(g, m))));
        }
    }
}

TEST_CASE("stars, star triangles and Cameron-Walker graphs") {
    CHECK(is_star(star_graph(3)));
    CHECK(is_star(path_graph(2)));
    CHECK_FALSE(is_star(Graph(1)));
    CHECK(is_star_triangle(complete_graph(3)));
    CHECK(is_star_triangle(bowtie()));
    CHECK_FALSE(is_star_triangle(triangle_with_tail()));

    CHECK_FALSE(is_cameron_walker(star_graph(3)));
    CHECK_FALSE(is_cameron_walker(bowtie()));
    CHECK_FALSE(is_cameron_walker(cycle_graph(5)));
    // Edge x-y, leaf at x, pendant triangle at y.
    const Graph cw = from(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {3, 4}});
    CHECK(induced_matching_number(cw) == 2);
    CHECK(matching_number(cw) == 2);
    CHECK(is_cameron_walker(cw));
    CHECK(is_vertex_decomposable(cw));

    for (int s = 0; s < 40; ++s) {
        const Graph g = random_cameron_walker(s, 12);
        REQUIRE(is_cameron_walker(g));
        REQUIRE(is_vertex_decomposable(g));
    }
}

TEST_CASE("pendant triangles") {
    const auto bt = pendant_triangles(bowtie());
    CHECK(bt == std::vector<PendantTriangle>{{0, 1, 2}, {0, 3, 4}});
    CHECK(pendant_triangles_at(bowtie(), 0) == 2);
    CHECK(pendant_triangles(complete_graph(3)).empty());
    CHECK(pendant_triangles(triangle_with_tail()) == std::vector<PendantTriangle>{{0, 1, 2}});
}

TEST_CASE("shedding vertices") {
    const Graph p3_plus = from(4, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_shedding_vertex(p3_plus, 3));

    const oracle::Adj c5(cycle_graph(5));
    for (int v = 0; v < 5; ++v) CHECK(is_shedding_vertex(cycle_graph(5), v) == oracle::shedding(c5, 31, v));

    for (const Graph& g : connected_graphs_up_to(6)) {
        const oracle::Adj a(g);
        const std::uint64_t all = g.vertices().bits();
        for (int v = 0; v < g.order(); ++v) {
            const bool shed = is_shedding_vertex(g, v);
            REQUIRE(shed == oracle::shedding(a, all, v));
            if (shedding_shortcut(g, v)) REQUIRE(shed);
        }
    }
    for (const Graph& g : connected_graphs_up_to(7)) {
        for (const PendantTriangle& t : pendant_triangles(g)) REQUIRE(is_shedding_vertex(g, t.apex));
    }
}

TEST_CASE("vertex decomposability") {
    CHECK_FALSE(is_vertex_decomposable(cycle_graph(6)));
    CHECK(is_vertex_decomposable(cycle_graph(5)));
    CHECK(is_vertex_decomposable(Graph(4)));
    CHECK(is_vertex_decomposable(Graph(0)));
    CHECK_THROWS_AS(is_vertex_decomposable(path_graph(21)), BudgetExceeded);
    CHECK_NOTHROW(is_vertex_decomposable(path_graph(21), 21));

    for (const Graph& g : connected_graphs_up_to(6)) REQUIRE(is_vertex_decomposable(g) == oracle::vertex_decomposable(g));
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        const Graph g = random_graph(rng(), 9);
        REQUIRE(is_vertex_decomposable(g) == oracle::vertex_decomposable(g));
    }
    for (const Graph& g : connected_graphs_up_to(7)) {
        if (is_chordal(g)) REQUIRE(is_vertex_decomposable(g));
        if (is_vertex_decomposable(g) && is_unmixed(g)) {
            REQUIRE(reisner_cm(g, Field::gf2()));
            REQUIRE(reisner_cm(g, Field::rationals()));
        }
        if (is_vertex_decomposable(g)) REQUIRE(duval_scm(g, Field::gf2()));
    }
}

TEST_CASE("DIM-VD tags on small examples") {
    CHECK(to_string(DimVdTag::None) == "none");
    CHECK(to_string(DimVdTag::III) == "iii");

    const Graph p4 = named_graph("P4");
    const DimVdClassification cp4 = dimvd_class_check(p4, dim_decomposition(p4, std::vector<Edge>{{1, 2}}));
    REQUIRE(cp4.pairs.size() == 1);
    CHECK(cp4.pairs[0].tag == DimVdTag::None);
    CHECK_FALSE(cp4.in_class);

    const Graph tt = triangle_with_tail();
    const DimDecomposition dt = dim_decomposition(tt, std::vector<Edge>{{1, 2}, {3, 4}});
    const DimVdClassification ct = dimvd_class_check(tt, dt);
    CHECK(ct.pairs[0].tag == DimVdTag::II);
    CHECK(ct.pairs[0].witnesses == std::vector<int>{0});
    CHECK(ct.pairs[1].tag == DimVdTag::I);
    CHECK(ct.in_class);
    CHECK(dimvd_cm_criterion(tt, dt) == reisner_cm(tt, Field::gf2()));
    CHECK(dimvd_cm_criterion(tt, dt));

    // G_1: pair (3,4) has degrees 2 and 3 and no private common neighbour.
    const Graph g1 = named_graph("G1");
    const DimDecomposition d1 = dim_decomposition(g1, std::vector<Edge>{{2, 3}, {4, 5}});
    const DimVdClassification c1 = dimvd_class_check(g1, d1);
    CHECK(c1.pairs[0].tag == DimVdTag::None);
    CHECK(c1.pairs[1].tag == DimVdTag::None);
    CHECK_FALSE(c1.in_class);
    CHECK_THROWS_AS(dimvd_cm_criterion(g1, d1), PreconditionError);
}

TEST_CASE("DIM-VD criterion with two pendant triangles on one vertex") {
    // y with pendant triangles {1,2} and {3,4}, plus a tail y-5-6 so that deg y > 2 either way.
    const Graph g = from(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {5, 6}});
    const DimDecomposition d = dim_decomposition(g, std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
    REQUIRE(dimvd_class_check(g, d).in_class);
    CHECK_FALSE(dimvd_cm_criterion(g, d));
    CHECK_FALSE(reisner_cm(g, Field::gf2()));
}

TEST_CASE("DIM-VD criterion preconditions") {
    const Graph k2 = path_graph(2);
    CHECK_THROWS_AS(dimvd_cm_criterion(k2, dim_decomposition(k2, std::vector<Edge>{{0, 1}})), PreconditionError);
    const Graph two = disjoint_union(triangle_with_tail(), path_graph(2));
    const DimDecomposition d = dim_decomposition(two, std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
    CHECK_THROWS_AS(dimvd_cm_criterion(two, d), PreconditionError);
}

TEST_CASE("random DIM-VD instances") {
    int cm = 0;
    int typed[5] = {0, 0, 0, 0, 0};
    for (int s = 0; s < 150; ++s) {
        const DimInstance inst = random_dimvd_graph(s, 12);
        const DimVdClassification c = dimvd_class_check(inst.graph, inst.decomposition);
        REQUIRE(c.in_class);
        for (const DimVdPairTag& t : c.pairs) ++typed[static_cast<int>(t.tag)];
        REQUIRE(is_vertex_decomposable(inst.graph));
        const bool crit = dimvd_cm_criterion(inst.graph, inst.decomposition);
        REQUIRE(crit == reisner_cm(inst.graph, Field::gf2()));
        REQUIRE(crit == (is_vertex_decomposable(inst.graph) && is_unmixed(inst.graph)));
        cm += crit ? 1 : 0;
    }
    CHECK(cm > 0);
    for (int tag = 1; tag <= 4; ++tag) CHECK(typed[tag] > 0);
}
