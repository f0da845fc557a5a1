#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eil/graph.hpp"
#include "eil/matchings.hpp"
#include "eil/resolutions.hpp"

namespace eil {

// Vertex labelings (0-based):
//   Path{n}, Cycle{n}, Complete{n}: 0..n-1 in path / cycle order.
//   Star{r}: centre 0, leaves 1..r.
//   WhiskeredComplete{n}: x_i = i-1 (the K_n), y_i = n+i-1 with y_i ~ x_i.
//   Gab{a,b}: x = 0, y_i = i for i = 1..a+b+1, then the new cycle vertices
//     of y_1, y_2, ... in turn (4 per 5-cycle, 3 per 4-cycle), each cycle
//     walked from y_i.
//   Gabmn{a,b,m,n}: K_{2n} on 0..2n-1 with hub 0; pendants on the last 2m core
//     vertices, in order; then per a-gadget A, B, C, D, E with edges hub-A,
//     A-B, A-D, B-C, B-E; then per b-gadget P, Q, R with the path hub-P-Q-R.
//   Hk{k}: u = 0, v = 1, x_i = 1+i, y_i = 1+k+i, z_{i1} = 2k+2i, z_{i2} = 2k+2i+1.
//   HkPrime{k}: u = 0, v = 1, x_i = 1+i, y_i = 1+k+i, z_i = 1+2k+i.
//   Named graphs: printed label minus one.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int r);
Graph whiskered_complete(int n);
Graph gab_graph(int a, int b);
Graph gabmn_graph(int a, int b, int m, int n);
Graph hk_graph(int k);
Graph hk_prime_graph(int k);
/// "G0", "G1", "G2", "G3" or "P4".
Graph named_graph(std::string_view name);

struct FamilySpec {
    std::string name;                 ///< Path, Cycle, Complete, Star, WhiskeredComplete, Gab, Gabmn, Hk, HkPrime, Named, CameronWalker, DimVdRandom
    std::vector<std::int64_t> params; ///< numeric parameters in the order of the name's signature
    std::string label;                ///< Named only
};

/// Throws InvalidInput on an unknown family, a wrong parameter count or a value outside the family's domain.
Graph build(const FamilySpec& spec);
/// Parses "Hk 3", "Gabmn 1 0 2 2", "Named G1" as argument lists.
FamilySpec parse_family(const std::vector<std::string>& words);

/// H_k' edges by name: 'e' {u,x_i}, 'f' {v,y_i}, 'g' {x_i,z_i}, 'h' {y_i,z_i}; i is 1-based.
Edge hk_prime_edge(int k, char family, int i);
/// Generator order for I(H_k'): the rows g_i, h_i, f_i, e_i for i = 2..k-1, then
/// e_1, h_1, f_k, g_k, e_k, g_1, f_1, h_k. For k = 2 only the last row remains.
std::vector<Edge> hk_prime_order(int k);
/// ξ^{(k)} in the basis of hk_prime_order(k); homological index 2k+1, degree 3k+2.
std::vector<ChainTerm> hk_prime_xi(int k);

struct GabmnParams {
    int a = 0;
    int b = 0;
    int m = 0;
    int n = 0;
    friend bool operator==(const GabmnParams&, const GabmnParams&) = default;
};
/// Parameters with ind = p, min = q, match = r. Throws InvalidInput unless 0 < p <= q <= r <= 2q.
GabmnParams solve_gabmn_params(int p, int q, int r);

struct DimInstance {
    Graph graph;
    DimDecomposition decomposition;
};

/// G(n, 1/2) with n uniform in [1, n_max].
Graph random_graph(std::uint64_t seed, int n_max);
/// Random graph with a prescribed dominating induced matching, randomly relabelled.
DimInstance random_dim_graph(std::uint64_t seed, int n_max);
/// Connected graph whose decomposition passes dimvd_class_check, W ≠ ∅, built
/// from random pair gadgets of types (i)–(iv). Requires n_max >= 3.
DimInstance random_dimvd_graph(std::uint64_t seed, int n_max);
/// Connected bipartite core X ⊔ Y, at least one leaf at every x, pendant
/// triangles at some y. Requires n_max >= 5.
Graph random_cameron_walker(std::uint64_t seed, int n_max);

} // namespace eil
