#pragma once

#include <compare>
#include <span>
#include <vector>

#include "eil/vertex_set.hpp"

namespace eil {

/// Unordered vertex pair, normalised so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    constexpr Edge() = default;
    constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr VertexSet ends() const { return VertexSet{u, v}; }
    constexpr bool touches(int w) const { return u == w || v == w; }
    /// The endpoint that is not `w`.
    constexpr int other(int w) const { return w == u ? v : u; }

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1 with n <= 64.
///
/// Each adjacency row is one VertexSet, so every neighbourhood or subset
/// operation is a handful of word instructions.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    /// Edgeless graph on n vertices. Throws InvalidInput if n is outside [0, 64].
    explicit Graph(int n);

    /// Throws InvalidInput on loops, duplicate edges or out-of-range endpoints.
    static Graph from_edges(int n, std::span<const Edge> edges);

    /// Throws InvalidInput on a loop, an existing edge or an out-of-range endpoint.
    void add_edge(int u, int v);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }
    /// Degree of v inside the induced subgraph on `within`.
    int degree_within(int v, VertexSet within) const { return (adj_[v] & within).size(); }

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const;
    /// Edges with both ends in `within`, sorted lexicographically.
    std::vector<Edge> edges_within(VertexSet within) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the vertex of the parent graph that became vertex i.
    std::vector<int> to_parent;
};

/// G_W. Vertices of W keep their relative order. Throws InvalidInput if W is not a subset of V(G).
InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);

/// N(U): union of the open neighbourhoods of U (may meet U).
VertexSet open_neighborhood(const Graph& g, VertexSet u);
/// N[U] = U ∪ N(U).
VertexSet closed_neighborhood(const Graph& g, VertexSet u);
/// G ∖ N[U].
InducedSubgraph remove_closed_neighborhood(const Graph& g, VertexSet u);

VertexSet isolated_vertices(const Graph& g);
/// The 0-vertex graph counts as connected.
bool is_connected(const Graph& g);
/// Components ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of G[within], ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
/// The component of G[within] containing `start`.
VertexSet component_of(const Graph& g, VertexSet within, int start);

bool is_independent(const Graph& g, VertexSet s);
bool is_edgeless(const Graph& g);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
/// Vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace eil
