#include "eil/graph.hpp"

#include <algorithm>
#include <string>

#include "eil/errors.hpp"

namespace eil {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw InvalidInput("vertex count " + std::to_string(n) + " outside [0, 64]");
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::add_edge(int u, int v) {
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                           std::to_string(n));
    }
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v)) {
        throw InvalidInput("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
}

int Graph::size() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += row.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const { return edges_within(vertices()); }

std::vector<Edge> Graph::edges_within(VertexSet within) const {
    std::vector<Edge> out;
    for (int u : within) {
        for (int v : adj_[u] & within) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
    if (!w.is_subset_of(g.vertices())) throw InvalidInput("induced_subgraph: vertex set out of range");
    InducedSubgraph out{Graph(w.size()), w.to_vector()};
    std::vector<int> to_child(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = static_cast<int>(i);
    for (const Edge& e : g.edges_within(w)) out.graph.add_edge(to_child[e.u], to_child[e.v]);
    return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet u) {
    VertexSet out;
    for (int x : u) out |= g.neighbors(x);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet u) { return u | open_neighborhood(g, u); }

InducedSubgraph remove_closed_neighborhood(const Graph& g, VertexSet u) {
    return induced_subgraph(g, g.vertices() - closed_neighborhood(g, u));
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (int v : g.vertices()) {
        if (g.neighbors(v).empty()) out.insert(v);
    }
    return out;
}

VertexSet component_of(const Graph& g, VertexSet within, int start) {
    VertexSet seen = VertexSet::singleton(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = component_of(g, within, rest.first());
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return component_of(g, g.vertices(), 0) == g.vertices();
}

bool is_independent(const Graph& g, VertexSet s) {
    return std::none_of(s.begin(), s.end(), [&](int v) { return g.neighbors(v).intersects(s); });
}

bool is_edgeless(const Graph& g) { return isolated_vertices(g) == g.vertices(); }

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw InvalidInput("relabel: permutation size mismatch");
    Graph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    return out;
}

} // namespace eil
