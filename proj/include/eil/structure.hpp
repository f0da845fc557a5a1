#pragma once

#include <string>
#include <vector>

#include "eil/graph.hpp"
#include "eil/matchings.hpp"

namespace eil {

/// Repeated simplicial-vertex elimination.
bool is_chordal(const Graph& g);

/// Collapse of each matched pair to one vertex. Vertex labels: the vertices of
/// W in increasing order, then x_1, ..., x_m in pair order.
Graph tilde_graph(const Graph& g, const DimDecomposition& d);
bool is_forest(const Graph& g);

/// K_{1,r} with r >= 1.
bool is_star(const Graph& g);
/// k >= 1 triangles sharing one common vertex and nothing else.
bool is_star_triangle(const Graph& g);
/// Connected, ind-match = match, neither a star nor a star triangle.
bool is_cameron_walker(const Graph& g);

/// Triangle {apex, v1, v2} with deg v1 = deg v2 = 2 and deg apex > 2.
struct PendantTriangle {
    int apex = 0;
    int v1 = 0; ///< v1 < v2
    int v2 = 0;
    friend bool operator==(const PendantTriangle&, const PendantTriangle&) = default;
};
std::vector<PendantTriangle> pendant_triangles(const Graph& g);
int pendant_triangles_at(const Graph& g, int apex);

/// (VD2) by direct check: no maximal independent set of G minus N[v] stays maximal in G minus v.
bool is_shedding_vertex(const Graph& g, int v);
/// Some w ≠ v with N[w] ⊆ N[v]. Sufficient for shedding, not necessary.
bool shedding_shortcut(const Graph& g, int v);

inline constexpr int kVertexDecomposableBudget = 20;
/// Throws BudgetExceeded if n > max_vertices.
bool is_vertex_decomposable(const Graph& g, int max_vertices = kVertexDecomposableBudget);

enum class DimVdTag { None = 0, I = 1, II = 2, III = 3, IV = 4 };
std::string to_string(DimVdTag tag);

struct DimVdPairTag {
    DimVdTag tag = DimVdTag::None;
    /// (ii), (iii): {y}; (iv): {y1, y2, y3}; otherwise empty.
    std::vector<int> witnesses;
};

struct DimVdClassification {
    std::vector<DimVdPairTag> pairs; ///< parallel to DimDecomposition::pairs
    bool in_class = false;
};

/// Tags each pair with the first of conditions (i)–(iv) it satisfies.
DimVdClassification dimvd_class_check(const Graph& g, const DimDecomposition& d);

/// #W = m_2 and every y in W has exactly one pair with both ends adjacent to y.
/// Throws PreconditionError unless G is connected, W ≠ ∅ and the decomposition is in class.
bool dimvd_cm_criterion(const Graph& g, const DimDecomposition& d);

} // namespace eil
