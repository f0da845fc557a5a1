#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

/// Parses one graph6 record. A leading ">>graph6<<" header and trailing
/// whitespace are accepted; anything else malformed throws InvalidInput.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]} with 1-indexed vertices.
Graph parse_edge_json(std::string_view text);
std::string write_edge_json(const Graph& g);

struct DotHighlight {
    std::vector<Edge> edges;
    VertexSet vertices;
};

/// Undirected DOT, 1-indexed node names, highlighted items drawn bold/red.
std::string write_dot(const Graph& g, const std::optional<DotHighlight>& highlight = std::nullopt);

} // namespace eil
