#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "eil/census.hpp"
#include "eil/covers.hpp"
#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/homology.hpp"
#include "eil/linalg.hpp"
#include "eil/matchings.hpp"
#include "oracles.hpp"

using namespace eil;

namespace {

std::map<std::pair<int, int>, long long> entries_of(const BettiTable& t) {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [ij, b] : t.entries) out[ij] = b;
    return out;
}

std::vector<long long> as_ll(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

std::vector<std::uint64_t> all_faces(const SimplicialComplex& x) {
    std::vector<std::uint64_t> out;
    for (const auto& bucket : x.faces_by_size()) {
        for (VertexSet f : bucket) out.push_back(f.bits());
    }
    return out;
}

Graph disjoint_edges(int m) {
    Graph g(2 * m);
    for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

const std::vector<Field>& fields() {
    static const std::vector<Field> f{Field::gf2(), Field::rationals(), Field::prime(3)};
    return f;
}

} // namespace

TEST_CASE("fields parse and reject") {
    CHECK(Field::parse("gf2") == Field::gf2());
    CHECK(Field::parse("rat") == Field::rationals());
    CHECK(Field::parse("gfp:7").characteristic() == 7);
    CHECK(Field::rationals().characteristic() == 0);
    CHECK_THROWS_AS(Field::parse("gfp:9"), InvalidInput);
    CHECK_THROWS_AS(Field::parse("real"), InvalidInput);
    CHECK_THROWS_AS(Field::prime(1), InvalidInput);
}

TEST_CASE("sparse rank against the dense oracle") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 300; ++t) {
        const int rows = 1 + static_cast<int>(rng() % 7);
        const int cols = 1 + static_cast<int>(rng() % 7);
        std::vector<std::vector<long long>> dense(rows, std::vector<long long>(cols, 0));
        std::vector<SparseColumn> sparse(cols);
        for (int c = 0; c < cols; ++c) {
            for (int r = 0; r < rows; ++r) {
                if (rng() % 2) continue;
                const long long v = static_cast<long long>(rng() % 7) - 3;
                if (v == 0) continue;
                dense[r][c] = v;
                sparse[c].emplace_back(r, v);
            }
        }
        for (const Field& f : fields()) {
            REQUIRE(static_cast<int>(matrix_rank(sparse, rows, f)) == oracle::rank(dense, f.characteristic()));
        }
    }
}

TEST_CASE("rank over Q survives 64-bit overflow") {
    // Entries near 2^40: fraction-free elimination overflows int64 and must fall back.
    const std::int64_t big = std::int64_t{1} << 40;
    std::vector<SparseColumn> cols{{{0, big}, {1, big + 1}, {2, 3}},
                                   {{0, big + 7}, {1, big - 5}, {2, big}},
                                   {{0, 2 * big + 7}, {1, 2 * big - 4}, {2, big + 3}}};
    CHECK(matrix_rank(cols, 3, Field::rationals()) == 2);
    CHECK(in_column_span(cols, SparseColumn{{0, 3 * big + 14}, {1, 3 * big - 9}, {2, 2 * big + 3}}, 3,
                         Field::rationals()));
    CHECK_FALSE(in_column_span(cols, SparseColumn{{2, 1}}, 3, Field::rationals()));
}

TEST_CASE("independence complexes") {
    const SimplicialComplex k2 = independence_complex(path_graph(2));
    CHECK(k2.facets() == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}});
    const SimplicialComplex e3 = independence_complex(Graph(3));
    CHECK(e3.facets() == std::vector<VertexSet>{VertexSet{0, 1, 2}});
    const SimplicialComplex c5 = independence_complex(cycle_graph(5));
    CHECK(c5.facets().size() == 5);
    for (VertexSet f : c5.facets()) CHECK(f.size() == 2);
    CHECK(independence_complex(Graph(0)).facets() == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("void and empty complexes are distinct") {
    const SimplicialComplex v = SimplicialComplex::void_complex(3);
    const SimplicialComplex e = SimplicialComplex::empty_complex(3);
    CHECK(v.is_void());
    CHECK_FALSE(e.is_void());
    CHECK(v.dimension() == -2);
    CHECK(e.dimension() == -1);
    CHECK(reduced_homology_ranks(v, Field::gf2()).empty());
    CHECK(reduced_homology_ranks(e, Field::gf2()) == std::vector<std::int64_t>{1});
    CHECK(reduced_euler_characteristic(v) == 0);
    CHECK(reduced_euler_characteristic(e) == -1);
}

TEST_CASE("reduced homology examples") {
    const SimplicialComplex triangle =
        SimplicialComplex::from_facets(3, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}});
    for (const Field& f : fields()) {
        CHECK(reduced_homology_ranks(triangle, f) == std::vector<std::int64_t>{0, 0, 1});
        CHECK(reduced_homology_ranks(independence_complex(cycle_graph(5)), f) == std::vector<std::int64_t>{0, 0, 1});
    }
}

TEST_CASE("homology of independence complexes matches the oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 120; ++t) {
        const Graph g = random_graph(rng(), 8);
        const SimplicialComplex x = independence_complex(g);
        for (const Field& f : fields()) {
            const auto ranks = reduced_homology_ranks(x, f);
            REQUIRE(as_ll(ranks) == oracle::reduced_homology(all_faces(x), f.characteristic()));
            std::int64_t alt = 0;
            for (std::size_t k = 0; k < ranks.size(); ++k) alt += (k % 2 == 0 ? -1 : 1) * ranks[k];
            REQUIRE(alt == reduced_euler_characteristic(x));
        }
    }
}

TEST_CASE("homology ranks do not depend on face order") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        const SimplicialComplex x = independence_complex(random_graph(rng(), 8));
        auto faces = x.faces_by_size();
        const auto base = reduced_homology_from_faces(faces, Field::rationals());
        for (auto& bucket : faces) std::shuffle(bucket.begin(), bucket.end(), rng);
        REQUIRE(reduced_homology_from_faces(faces, Field::rationals()) == base);
        REQUIRE(reduced_homology_from_faces(faces, Field::gf2()) == reduced_homology_ranks(x, Field::gf2()));
    }
}

TEST_CASE("Hochster's formula matches the brute-force oracle") {
    std::mt19937_64 rng(29);
    std::vector<Graph> graphs{cycle_graph(5), named_graph("G0"), path_graph(5), Graph(3), Graph(0)};
    for (int t = 0; t < 60; ++t) graphs.push_back(random_graph(rng(), 8));
    for (const Graph& g : graphs) {
        for (const Field& f : {Field::gf2(), Field::rationals()}) {
            const BettiTable table = hochster_betti(g, f);
            REQUIRE(entries_of(table) == oracle::hochster(g, f.characteristic()));
            REQUIRE(table.at(0, 0) == 1);
            REQUIRE(table.regularity() == regularity(g, f));
        }
    }
}

TEST_CASE("Betti and regularity examples") {
    const BettiTable edge = hochster_betti(path_graph(2), Field::gf2());
    CHECK(edge.at(1, 2) == 1);
    CHECK(edge.entries.size() == 2);
    CHECK(regularity(path_graph(2), Field::gf2()) == 1);
    CHECK(regularity(Graph(4), Field::gf2()) == 0);

    const BettiTable h2p = hochster_betti(hk_prime_graph(2), Field::gf2());
    CHECK(h2p.at(5, 8) != 0);
    const BettiTable h3p = hochster_betti(hk_prime_graph(3), Field::gf2());
    CHECK(h3p.at(7, 11) != 0);

    for (const Field& f : {Field::gf2(), Field::rationals()}) {
        CHECK(regularity(cycle_graph(5), f) == 2);
        CHECK(regularity(hk_graph(2), f) == 3);
        CHECK(regularity(gab_graph(0, 0), f) == 2);
    }
    CHECK_THROWS_AS(hochster_betti(cycle_graph(6), Field::gf2(), 5), BudgetExceeded);
    CHECK_THROWS_AS(regularity(cycle_graph(6), Field::gf2(), 5), BudgetExceeded);
}

TEST_CASE("Betti table rendering") {
    const BettiTable t = hochster_betti(cycle_graph(5), Field::gf2());
    CHECK(t.projective_dimension() == 3);
    CHECK(t.grid().find("total:") != std::string::npos);
    CHECK(t.to_json().find("\"regularity\":2") != std::string::npos);
}

TEST_CASE("Woodroofe lower bound") {
    CHECK(reg_lower_bound_woodroofe(cycle_graph(5)) == 2);
    CHECK(reg_lower_bound_woodroofe(gab_graph(0, 1)) == 3);
    CHECK(reg_lower_bound_woodroofe(gab_graph(1, 0)) == 4);
    CHECK(reg_lower_bound_woodroofe(disjoint_edges(3)) == 3);
    CHECK(reg_lower_bound_woodroofe(Graph(3)) == 0);

    const WoodroofeWitness w = woodroofe_witness(cycle_graph(5));
    CHECK(w.cycle_lengths == std::vector<int>{5});
    CHECK(w.edges == 0);

    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const Graph g = random_graph(rng(), 9);
        const WoodroofeWitness wit = woodroofe_witness(g);
        // The witness is an induced union of edges and (3i+2)-cycles.
        const InducedSubgraph h = induced_subgraph(g, wit.vertices);
        for (int v = 0; v < h.graph.order(); ++v) {
            const int deg = h.graph.degree(v);
            REQUIRE((deg == 1 || deg == 2));
        }
        int bound = wit.edges;
        for (int len : wit.cycle_lengths) {
            REQUIRE(len % 3 == 2);
            bound += len / 3 + 1;
        }
        REQUIRE(bound == wit.bound);
        REQUIRE(wit.bound <= regularity(g, Field::gf2()));
        REQUIRE(wit.bound <= regularity(g, Field::rationals()));
        REQUIRE(wit.bound >= induced_matching_number(g));
    }
}

TEST_CASE("Kalai-Meshulam subadditivity") {
    // G_{a,b}: one part per y_i, its attached cycle plus {x, y_i}.
    const Graph gab = gab_graph(1, 0);
    std::vector<std::vector<Edge>> parts;
    const VertexSet no_x = gab.vertices() - VertexSet{0};
    for (int y = 1; y <= 2; ++y) parts.push_back(gab.edges_within(component_of(gab, no_x, y) | VertexSet{0}));
    const SubadditivityReport r = km_subadditivity(gab, parts, Field::gf2());
    CHECK(r.part_regularities == std::vector<int>{2, 2});
    CHECK(r.bound == 4);
    CHECK(r.regularity == 4);
    CHECK(r.holds);

    // H_2: 4-cycles with {x_j, u}, and the star on v, y_1, ..., y_k.
    const int k = 2;
    const Graph hk = hk_graph(k);
    std::vector<std::vector<Edge>> hparts;
    for (int j = 1; j <= k; ++j) {
        hparts.push_back(hk.edges_within(VertexSet{0, 1 + j, 1 + k + j, 2 * k + 2 * j, 2 * k + 2 * j + 1}));
    }
    VertexSet star{1};
    for (int j = 1; j <= k; ++j) star.insert(1 + k + j);
    hparts.push_back(hk.edges_within(star));
    const SubadditivityReport hr = km_subadditivity(hk, hparts, Field::gf2());
    CHECK(hr.part_regularities == std::vector<int>{1, 1, 1});
    CHECK(hr.bound == k + 1);
    CHECK(hr.regularity == k + 1);

    const Graph c5 = cycle_graph(5);
    const SubadditivityReport one = km_subadditivity(c5, {c5.edges()}, Field::gf2());
    CHECK(one.bound == one.regularity);

    CHECK_THROWS_AS(km_subadditivity(c5, {{Edge(0, 1)}}, Field::gf2()), InvalidInput);
    CHECK_THROWS_AS(km_subadditivity(c5, {c5.edges(), {Edge(0, 2)}}, Field::gf2()), InvalidInput);

    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        const Graph g = random_graph(rng(), 8);
        const int s = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<Edge>> split(s);
        for (const Edge& e : g.edges()) split[rng() % s].push_back(e);
        REQUIRE(km_subadditivity_check(g, split, Field::gf2()));
    }
}

TEST_CASE("Reisner and Duval on named graphs") {
    for (const Field& f : {Field::gf2(), Field::rationals()}) {
        CHECK(reisner_cm(named_graph("G1"), f));
        CHECK_FALSE(reisner_cm(named_graph("G2"), f));
        CHECK(reisner_cm(named_graph("P4"), f));
        CHECK(duval_scm(named_graph("G3"), f));
        CHECK_FALSE(duval_scm(cycle_graph(6), f));
        CHECK(duval_scm(Graph(4), f));
        CHECK(reisner_cm(Graph(4), f));
    }
}

TEST_CASE("graph CM tests agree with the complex-level tests") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        const SimplicialComplex x = independence_complex(g);
        for (const Field& f : {Field::gf2(), Field::rationals()}) {
            const bool cm = reisner_cm(g, f);
            REQUIRE(cm == is_cohen_macaulay(x, f));
            REQUIRE(duval_scm(g, f) == is_sequentially_cohen_macaulay(x, f));
            if (cm) REQUIRE(is_unmixed(g));
        }
    }
}

TEST_CASE("sandwich ind <= reg <= min over the census up to 7") {
    for (const Graph& g : connected_graphs_up_to(7)) {
        const int reg = regularity(g, Field::gf2());
        REQUIRE(induced_matching_number(g) <= reg);
        REQUIRE(reg <= min_matching_number(g));
    }
}

TEST_CASE("independence homology cache agrees with direct computation") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(rng(), 9);
        IndependenceHomology hom(g, Field::gf2());
        for (int s = 0; s < 20; ++s) {
            const VertexSet w(rng() & g.vertices().bits());
            const auto q = hom.q_polynomial(w);
            const auto direct = oracle::reduced_homology(oracle::independent_subsets(g, w.bits()), 2);
            std::vector<long long> trimmed = direct;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            std::vector<long long> qq = as_ll(q);
            while (!qq.empty() && qq.back() == 0) qq.pop_back();
            REQUIRE(qq == trimmed);
        }
    }
}
