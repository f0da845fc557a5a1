#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

bool is_matching(const Graph& g, std::span<const Edge> edges);
/// Matching whose unmatched vertices form an independent set.
bool is_maximal_matching(const Graph& g, std::span<const Edge> edges);
/// Matching whose edges are pairwise 3-disjoint.
bool is_induced_matching(const Graph& g, std::span<const Edge> edges);

struct Matching {
    std::vector<Edge> edges; ///< sorted
    bool is_maximal = false;
    bool is_induced = false;
    bool is_dominating_induced = false;

    VertexSet vertices() const;
    int size() const { return static_cast<int>(edges.size()); }
};

/// Sorts the edges and computes the flags. Throws InvalidInput if some edge
/// is not in G or two edges share a vertex.
Matching make_matching(const Graph& g, std::vector<Edge> edges);

int matching_number(const Graph& g);
int min_matching_number(const Graph& g);
int induced_matching_number(const Graph& g);

/// Lexicographically least (by sorted edge list) maximum matching.
std::vector<Edge> maximum_matching(const Graph& g);
/// Lexicographically least maximum induced matching.
std::vector<Edge> maximum_induced_matching(const Graph& g);
/// Lexicographically least minimum maximal matching.
std::vector<Edge> minimum_maximal_matching(const Graph& g);

enum class DimStrategy {
    Direct,         ///< grow induced matchings edge by edge, keep the maximal ones
    IndependentSet, ///< choose W independent so that G minus W is a perfect matching graph
};

struct DimEnumeration {
    std::vector<Matching> dims; ///< sorted by edge list
    bool truncated = false;
};

DimEnumeration enumerate_dims(const Graph& g, DimStrategy strategy = DimStrategy::Direct,
                              std::size_t limit = 1'000'000);
bool has_dominating_induced_matching(const Graph& g);

struct MatchedPair {
    int x1 = 0; ///< smaller label
    int x2 = 0;

    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// V = W ⊔ M for a dominating induced matching M.
struct DimDecomposition {
    VertexSet w;
    std::vector<MatchedPair> pairs; ///< sorted by (x1, x2)
    int m1 = 0;                     ///< pairs with a degree-1 endpoint
    int m2 = 0;                     ///< pairs with both endpoints of degree >= 2
    VertexSet w0;                   ///< non-isolated vertices of W

    int m() const { return static_cast<int>(pairs.size()); }
    VertexSet matched_vertices() const;
    /// Index of the pair containing v, or -1 if v is in W.
    int pair_of(int v) const;
};

/// Throws PreconditionError if the edges do not form a dominating induced matching of G.
DimDecomposition dim_decomposition(const Graph& g, std::span<const Edge> dim);
DimDecomposition dim_decomposition(const Graph& g, const Matching& dim);
/// Re-checks every DimDecomposition invariant against G.
bool validate_dim_decomposition(const Graph& g, const DimDecomposition& d);

enum class EqEdgeType { I = 1, II = 2, III = 3 };

struct TaggedEdge {
    Edge edge;
    EqEdgeType type = EqEdgeType::I;
};

/// The vertex partition certifying ind-match(G) = min-match(G).
/// Pairs 0..alpha-1 carry a z vertex; pairs alpha..alpha+beta-1 do not.
struct EqPartition {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    std::vector<std::pair<int, int>> v; ///< (v_{i1}, v_{i2}), size alpha + beta
    std::vector<int> z;                 ///< size alpha
    std::vector<int> w;                 ///< size gamma
    std::vector<TaggedEdge> e_prime;    ///< every edge that is neither some e_i nor some e'_i
};

/// Built from the lexicographically least maximum induced matching and minimum
/// maximal matching. Empty iff ind-match(G) < min-match(G). Throws
/// TheoremViolation if the constructed partition does not verify.
std::optional<EqPartition> eq_partition(const Graph& g);
bool verify_eq_partition(const Graph& g, const EqPartition& p);

/// For each edge e_k of an induced matching, the index of the first edge of the
/// maximal matching meeting it (-1 if none, which cannot happen for a maximal matching).
std::vector<int> pair_induced_with_maximal(std::span<const Edge> induced, std::span<const Edge> maximal);

} // namespace eil
