#pragma once

#include <optional>
#include <vector>

#include "eil/graph.hpp"
#include "eil/matchings.hpp"

namespace eil {

/// Bron–Kerbosch with pivoting on the complement; sorted by bit pattern.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
/// Complements of the maximal independent sets.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);
/// Maximal independent sets of G[within], as subsets of the parent vertex set.
std::vector<VertexSet> maximal_independent_sets_within(const Graph& g, VertexSet within);

bool is_vertex_cover(const Graph& g, VertexSet c);
bool is_minimal_vertex_cover(const Graph& g, VertexSet c);
bool is_unmixed(const Graph& g);
/// Minimum vertex cover size.
int height(const Graph& g);

/// Both ends of every pair with two ends of degree >= 2, plus the non-leaf end
/// of every pair with a leaf (the lower label when both ends are leaves).
/// Throws TheoremViolation if the result is not a minimal vertex cover.
VertexSet cover_C0(const Graph& g, const DimDecomposition& d);

/// Subsets of matched vertices meeting each pair at most once and avoiding
/// degree-1 vertices; ordered by size, then bit pattern. Includes the empty set.
std::vector<VertexSet> m2_candidates(const Graph& g, const DimDecomposition& d);

/// Vertices of W_0 isolated in G minus N[U].
VertexSet in_set(const Graph& g, const DimDecomposition& d, VertexSet u);
/// Indices j of the pairs with both ends of degree >= 2 that M_2 meets or whose
/// ends have their other neighbours inside N(M_2).
std::vector<int> i_set(const Graph& g, const DimDecomposition& d, VertexSet m2);
/// m_2' of G' = G minus N[M_2] for the induced decomposition.
int m2_prime(const Graph& g, const DimDecomposition& d, VertexSet m2);

struct FlatRecord {
    VertexSet m2;
    VertexSet n_m2; ///< open neighbourhood N(M_2)
    int m2_prime = 0;
    VertexSet in;
    int flat1_lhs = 0; ///< m_2 - m_2'
    int flat1_rhs = 0; ///< #N(M_2) - #M_2
    int flat2_lhs = 0; ///< #W_0
    int flat2_rhs = 0; ///< 2 m_2 - #N(M_2) + #M_2 + #IN
    bool flat1() const { return flat1_lhs == flat1_rhs; }
    bool flat2() const { return flat2_lhs <= flat2_rhs; }
};

struct FlatReport {
    bool holds = true;
    std::vector<FlatRecord> records;
    std::optional<FlatRecord> first_violation;
};

/// Evaluates the unmixedness condition over every M_2 candidate.
FlatReport flat_check(const Graph& g, const DimDecomposition& d, bool stop_at_first_violation = false);

} // namespace eil
