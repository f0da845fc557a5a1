#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "eil/betti.hpp"
#include "eil/complex.hpp"
#include "eil/field.hpp"
#include "eil/graph.hpp"

namespace eil {

/// Exponential sweeps refuse graphs with more vertices than this unless told otherwise.
inline constexpr int kDefaultBudgetBits = 24;

/// Faces are the independent sets of G.
SimplicialComplex independence_complex(const Graph& g);

/// Reduced homology of independence complexes of induced subgraphs, cached per
/// connected component. Ind of a disjoint union is a join, so the Poincaré
/// polynomials Q(t) = Σ_d rank H̃_d(Ind(G_W)) t^{d+1} multiply.
class IndependenceHomology {
public:
    IndependenceHomology(const Graph& g, Field field) : g_(g), field_(field) {}

    /// Coefficient e is rank H̃_{e-1}(Ind(G_W)). The zero polynomial is an empty vector.
    std::vector<std::int64_t> q_polynomial(VertexSet w);
    /// Largest independent set of G_W.
    int independence_number(VertexSet w);

private:
    struct Entry {
        std::vector<std::int64_t> q;
        int alpha = 0;
    };
    const Entry& component(VertexSet c);

    const Graph& g_;
    Field field_;
    std::unordered_map<std::uint64_t, Entry> cache_;
};

/// β_{i,j}(S/I(G)) = Σ_{|W| = j} rank H̃_{j-i-1}(Ind(G_W)). Throws BudgetExceeded if n > budget_bits.
BettiTable hochster_betti(const Graph& g, const Field& field, int budget_bits = kDefaultBudgetBits);
/// reg S/I(G) = 1 + max{d : H̃_d(Ind(G_W)) ≠ 0 for some W}; 0 for edgeless G.
int regularity(const Graph& g, const Field& field, int budget_bits = kDefaultBudgetBits);

/// Reisner's criterion on Ind(G): the link of σ is Ind(G minus N[σ]).
bool reisner_cm(const Graph& g, const Field& field, int budget_bits = kDefaultBudgetBits);
/// Duval's criterion on Ind(G).
bool duval_scm(const Graph& g, const Field& field, int budget_bits = kDefaultBudgetBits);

struct WoodroofeWitness {
    VertexSet vertices;              ///< induced subgraph realising the bound
    int edges = 0;                   ///< number of K_2 components
    std::vector<int> cycle_lengths;  ///< lengths 3i + 2 of the cycle components
    int bound = 0;                   ///< edges + Σ (i + 1)
};

/// Best bound from induced subgraphs that are disjoint unions of edges and
/// cycles C_{3i+2}, found by exhaustive search.
WoodroofeWitness woodroofe_witness(const Graph& g, int budget_bits = kDefaultBudgetBits);
int reg_lower_bound_woodroofe(const Graph& g, int budget_bits = kDefaultBudgetBits);

struct SubadditivityReport {
    int regularity = 0;
    std::vector<int> part_regularities;
    int bound = 0;
    bool holds = false;
};

/// reg S/I(G) against Σ_k reg S/I(G_k), each G_k on the full vertex set with edge set E_k.
/// Throws InvalidInput unless every E_k ⊆ E(G) and the E_k cover E(G).
SubadditivityReport km_subadditivity(const Graph& g, const std::vector<std::vector<Edge>>& parts,
                                     const Field& field);
bool km_subadditivity_check(const Graph& g, const std::vector<std::vector<Edge>>& parts, const Field& field);

} // namespace eil
