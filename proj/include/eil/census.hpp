#pragma once

#include <string>
#include <vector>

#include "eil/field.hpp"
#include "eil/graph.hpp"

namespace eil {

inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxCensusOrder = 8;

struct CanonicalForm {
    std::string graph6;       ///< graph6 of the canonically relabelled graph
    std::vector<int> labeling; ///< labeling[v] = canonical label of v
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.graph6 == b.graph6; }
};

/// Individualization-refinement: equitable refinement, then branching on the
/// first smallest non-singleton cell, pruned by automorphisms found at leaves.
/// The form is the least adjacency string over the leaves of the search tree.
/// Throws InvalidInput if n > 10.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

/// One canonically labelled representative per isomorphism class of connected
/// graphs on exactly n vertices, sorted by graph6. Throws InvalidInput unless 1 <= n <= 8.
const std::vector<Graph>& connected_graphs(int n);
/// All of connected_graphs(1), ..., connected_graphs(n) in that order.
std::vector<Graph> connected_graphs_up_to(int n);

/// Connected graphs with at most n_max vertices and match = reg > ind-match over F.
std::vector<Graph> verify_case_v_census(int n_max, const Field& field);

} // namespace eil
