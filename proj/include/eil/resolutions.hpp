#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eil/betti.hpp"
#include "eil/field.hpp"
#include "eil/graph.hpp"

namespace eil {

/// Ordered minimal generators of a squarefree monomial ideal, each given by its support.
class MonomialList {
public:
    static constexpr int kMaxGenerators = 64;

    /// Throws InvalidInput on an empty support, a repeated generator, a
    /// divisibility relation, more than 64 generators or a variable >= n.
    MonomialList(int variables, std::vector<VertexSet> supports);

    int variables() const { return n_; }
    int size() const { return static_cast<int>(gens_.size()); }
    VertexSet operator[](int i) const { return gens_[i]; }
    const std::vector<VertexSet>& supports() const { return gens_; }

private:
    int n_;
    std::vector<VertexSet> gens_;
};

/// Edge ideal generators in the given order (sorted edge order when `order` is empty).
MonomialList edge_monomials(const Graph& g, std::span<const Edge> order = {});

/// Index set {i_1 < ... < i_s} (0-based bit positions) with the support of its lcm.
struct LSymbol {
    std::uint64_t indices = 0;
    VertexSet lcm;

    int size() const { return VertexSet(indices).size(); }
    int degree() const { return lcm.size(); }
    std::vector<int> index_list() const { return VertexSet(indices).to_vector(); }
    friend bool operator==(const LSymbol&, const LSymbol&) = default;
};

inline constexpr std::size_t kDefaultSymbolBudget = 2'000'000;

bool is_l_admissible(const MonomialList& m, std::uint64_t indices);
/// Every admissible symbol including the empty one, ordered by size, then index bits.
/// Throws BudgetExceeded past `budget` symbols.
std::vector<LSymbol> l_admissible_symbols(const MonomialList& m, std::size_t budget = kDefaultSymbolBudget);
/// Admissible symbols not properly contained in another admissible symbol.
std::vector<LSymbol> maximal_l_admissible(const MonomialList& m, std::size_t budget = kDefaultSymbolBudget);

/// Betti numbers of S/I from the Lyubeznik complex tensored with K. The
/// complex splits by lcm, and each strand is reduced separately. Throws
/// InternalError if the admissible symbols are not closed under the
/// differential or if d∘d ≠ 0.
BettiTable lyubeznik_betti(const MonomialList& m, const Field& field, std::size_t budget = kDefaultSymbolBudget);

struct ChainTerm {
    std::uint64_t indices = 0;
    std::int64_t coefficient = 0;
};

/// True iff the chain is a cycle of 1⊗d_i and not a boundary of 1⊗d_{i+1} over F.
/// Throws InvalidInput if a term is not admissible or not of homological
/// index i and degree j.
bool witness_cycle_check(const MonomialList& m, const Field& field, std::span<const ChainTerm> chain, int i, int j,
                         std::size_t budget = kDefaultSymbolBudget);

} // namespace eil
