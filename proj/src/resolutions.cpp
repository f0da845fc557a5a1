#include "eil/resolutions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "eil/errors.hpp"
#include "eil/linalg.hpp"

namespace eil {

MonomialList::MonomialList(int variables, std::vector<VertexSet> supports) : n_(variables), gens_(std::move(supports)) {
    if (n_ < 0 || n_ > 64) throw InvalidInput("monomial list: variable count outside [0, 64]");
    if (gens_.size() > static_cast<std::size_t>(kMaxGenerators)) {
        throw InvalidInput("monomial list: more than 64 generators");
    }
    for (std::size_t a = 0; a < gens_.size(); ++a) {
        if (gens_[a].empty()) throw InvalidInput("monomial list: the unit monomial is not allowed");
        if (!gens_[a].is_subset_of(VertexSet::range(n_))) throw InvalidInput("monomial list: variable out of range");
        for (std::size_t b = 0; b < a; ++b) {
            if (gens_[a] == gens_[b]) throw InvalidInput("monomial list: repeated generator");
            if (gens_[a].is_subset_of(gens_[b]) || gens_[b].is_subset_of(gens_[a])) {
                throw InvalidInput("monomial list: generators are not minimal (one divides another)");
            }
        }
    }
}

MonomialList edge_monomials(const Graph& g, std::span<const Edge> order) {
    std::vector<VertexSet> supports;
    if (order.empty()) {
        for (const Edge& e : g.edges()) supports.push_back(e.ends());
    } else {
        if (order.size() != static_cast<std::size_t>(g.size())) {
            throw InvalidInput("edge order must list every edge exactly once");
        }
        for (const Edge& e : order) {
            if (e.v >= g.order() || !g.adjacent(e.u, e.v)) throw InvalidInput("edge order contains a non-edge");
            supports.push_back(e.ends());
        }
    }
    return MonomialList(g.order(), std::move(supports));
}

namespace {

VertexSet lcm_of(const MonomialList& m, std::uint64_t indices) {
    VertexSet out;
    for (int i : VertexSet(indices)) out |= m[i];
    return out;
}

struct Strand {
    std::vector<std::vector<std::uint64_t>> by_size; ///< symbols of this lcm, grouped by size
    std::vector<std::unordered_map<std::uint64_t, int>> position;
};

using Chain = std::map<std::uint64_t, std::int64_t>;

// 1⊗d: drop i_t when the lcm does not change, with sign (-1)^{t+1} for 1-based t.
void add_boundary(const MonomialList& m, std::uint64_t sigma, std::int64_t coefficient, Chain& out) {
    const VertexSet full = lcm_of(m, sigma);
    int pos = 0;
    for (int i : VertexSet(sigma)) {
        const std::uint64_t tau = sigma & ~(std::uint64_t{1} << i);
        if (lcm_of(m, tau) == full) {
            auto& slot = out[tau];
            slot += (pos % 2 == 0) ? coefficient : -coefficient;
            if (slot == 0) out.erase(tau);
        }
        ++pos;
    }
}

std::map<std::uint64_t, Strand> strands_of(const std::vector<LSymbol>& symbols) {
    std::map<std::uint64_t, Strand> strands;
    for (const LSymbol& s : symbols) {
        Strand& st = strands[s.lcm.bits()];
        const auto size = static_cast<std::size_t>(s.size());
        if (st.by_size.size() <= size) {
            st.by_size.resize(size + 1);
            st.position.resize(size + 1);
        }
        st.position[size].emplace(s.indices, static_cast<int>(st.by_size[size].size()));
        st.by_size[size].push_back(s.indices);
    }
    return strands;
}

// Columns of 1⊗d_k inside a strand: from size-k symbols to size-(k-1) symbols.
std::vector<SparseColumn> differential(const MonomialList& m, const Strand& st, std::size_t k) {
    std::vector<SparseColumn> cols;
    if (k == 0 || k >= st.by_size.size()) return cols;
    for (std::uint64_t sigma : st.by_size[k]) {
        Chain image;
        add_boundary(m, sigma, 1, image);
        SparseColumn col;
        for (const auto& [tau, c] : image) {
            const auto it = st.position[k - 1].find(tau);
            if (it == st.position[k - 1].end()) {
                throw InternalError("Lyubeznik complex not closed: a boundary term is not admissible");
            }
            col.emplace_back(it->second, c);
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

bool vanishes(std::int64_t c, const Field& field) {
    return field.kind() == Field::Kind::Rational ? c == 0 : c % field.characteristic() == 0;
}

} // namespace

bool is_l_admissible(const MonomialList& m, std::uint64_t indices) {
    const std::vector<int> idx = VertexSet(indices).to_vector();
    for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
        VertexSet suffix;
        for (std::size_t r = t; r < idx.size(); ++r) suffix |= m[idx[r]];
        for (int q = 0; q < idx[t]; ++q) {
            if (m[q].is_subset_of(suffix)) return false;
        }
    }
    return true;
}

std::vector<LSymbol> l_admissible_symbols(const MonomialList& m, std::size_t budget) {
    std::vector<LSymbol> out{LSymbol{}};
    // Admissibility is inherited by suffixes, so grow symbols by prepending
    // smaller indices and check only the new longest suffix.
    auto dfs = [&](auto&& self, std::uint64_t set, VertexSet lcm, int smallest) -> void {
        for (int i0 = 0; i0 < smallest; ++i0) {
            const VertexSet next_lcm = lcm | m[i0];
            bool ok = true;
            for (int q = 0; q < i0 && ok; ++q) ok = !m[q].is_subset_of(next_lcm);
            if (!ok) continue;
            const std::uint64_t next = set | (std::uint64_t{1} << i0);
            out.push_back({next, next_lcm});
            if (out.size() > budget) throw BudgetExceeded("Lyubeznik symbol count exceeds budget");
            self(self, next, next_lcm, i0);
        }
    };
    for (int i = 0; i < m.size(); ++i) {
        const std::uint64_t single = std::uint64_t{1} << i;
        out.push_back({single, m[i]});
        if (out.size() > budget) throw BudgetExceeded("Lyubeznik symbol count exceeds budget");
        dfs(dfs, single, m[i], i);
    }
    std::sort(out.begin(), out.end(), [](const LSymbol& a, const LSymbol& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.indices < b.indices;
    });
    return out;
}

std::vector<LSymbol> maximal_l_admissible(const MonomialList& m, std::size_t budget) {
    std::vector<LSymbol> all = l_admissible_symbols(m, budget);
    std::vector<LSymbol> maximal;
    // Any admissible superset lies in some maximal symbol, so compare against those only.
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const LSymbol& big) {
            return (it->indices & ~big.indices) == 0;
        });
        if (!covered) maximal.push_back(*it);
    }
    std::sort(maximal.begin(), maximal.end(), [](const LSymbol& a, const LSymbol& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.indices < b.indices;
    });
    return maximal;
}

BettiTable lyubeznik_betti(const MonomialList& m, const Field& field, std::size_t budget) {
    const std::vector<LSymbol> symbols = l_admissible_symbols(m, budget);
    BettiTable table;
    table.field = field;
    for (const auto& [lcm_bits, st] : strands_of(symbols)) {
        // d∘d = 0 over the integers, symbol by symbol.
        for (const auto& bucket : st.by_size) {
            for (std::uint64_t sigma : bucket) {
                Chain once;
                add_boundary(m, sigma, 1, once);
                Chain twice;
                for (const auto& [tau, c] : once) add_boundary(m, tau, c, twice);
                if (!twice.empty()) throw InternalError("Lyubeznik differential does not square to zero");
            }
        }
        const std::size_t top = st.by_size.size();
        std::vector<std::int64_t> ranks(top + 1, 0);
        for (std::size_t k = 1; k < top; ++k) {
            ranks[k] = static_cast<std::int64_t>(
                matrix_rank(differential(m, st, k), static_cast<int>(st.by_size[k - 1].size()), field));
        }
        const int degree = VertexSet(lcm_bits).size();
        for (std::size_t k = 0; k < top; ++k) {
            const std::int64_t h = static_cast<std::int64_t>(st.by_size[k].size()) - ranks[k] - ranks[k + 1];
            table.add(static_cast<int>(k), degree, h);
        }
    }
    return table;
}

bool witness_cycle_check(const MonomialList& m, const Field& field, std::span<const ChainTerm> chain, int i, int j,
                         std::size_t budget) {
    std::map<std::uint64_t, Chain> by_lcm;
    for (const ChainTerm& term : chain) {
        if (std::popcount(term.indices) != i) throw InvalidInput("witness chain: term of the wrong homological index");
        if (term.indices >> m.size() != 0 && m.size() < 64) throw InvalidInput("witness chain: index out of range");
        if (!is_l_admissible(m, term.indices)) throw InvalidInput("witness chain: term is not L-admissible");
        const VertexSet lcm = lcm_of(m, term.indices);
        if (lcm.size() != j) throw InvalidInput("witness chain: term of the wrong degree");
        auto& slot = by_lcm[lcm.bits()][term.indices];
        slot += term.coefficient;
    }
    for (auto& [lcm, c] : by_lcm) std::erase_if(c, [&](const auto& kv) { return vanishes(kv.second, field); });
    std::erase_if(by_lcm, [](const auto& kv) { return kv.second.empty(); });
    if (by_lcm.empty()) return false;

    const auto strands = strands_of(l_admissible_symbols(m, budget));
    bool some_class_nonzero = false;
    for (const auto& [lcm, c] : by_lcm) {
        Chain image;
        for (const auto& [sigma, coef] : c) add_boundary(m, sigma, coef, image);
        for (const auto& [tau, coef] : image) {
            if (!vanishes(coef, field)) return false;
        }
        const Strand& st = strands.at(lcm);
        const auto k = static_cast<std::size_t>(i);
        SparseColumn target;
        for (const auto& [sigma, coef] : c) target.emplace_back(st.position[k].at(sigma), coef);
        if (!in_column_span(differential(m, st, k + 1), target, static_cast<int>(st.by_size[k].size()), field)) {
            some_class_nonzero = true;
        }
    }
    return some_class_nonzero;
}

} // namespace eil
