#include "eil/covers.hpp"

#include <algorithm>

#include "eil/errors.hpp"

namespace eil {

namespace {

// Bron–Kerbosch on the complement graph. Extending by v removes N[v] from the
// candidates; the pivot u leaves only P ∩ N[u] to branch on.
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty()) {
        if (x.empty()) out.push_back(r);
        return;
    }
    int pivot = -1;
    int fewest = 65;
    for (int u : p | x) {
        const int c = (p & closed_neighborhood(g, VertexSet::singleton(u))).size();
        if (c < fewest) {
            fewest = c;
            pivot = u;
        }
    }
    const VertexSet branch = p & closed_neighborhood(g, VertexSet::singleton(pivot));
    for (int v : branch) {
        const VertexSet nv = closed_neighborhood(g, VertexSet::singleton(v));
        bron_kerbosch(g, r | VertexSet::singleton(v), p - nv, x - nv, out);
        p.erase(v);
        x.insert(v);
    }
}

} // namespace

std::vector<VertexSet> maximal_independent_sets_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    bron_kerbosch(g, VertexSet{}, within, VertexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_independent_sets_within(g, g.vertices());
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexSet> out;
    for (VertexSet s : maximal_independent_sets(g)) out.push_back(g.vertices() - s);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_vertex_cover(const Graph& g, VertexSet c) { return is_independent(g, g.vertices() - c); }

bool is_minimal_vertex_cover(const Graph& g, VertexSet c) {
    if (!is_vertex_cover(g, c)) return false;
    // Dropping v uncovers an edge iff v has a neighbour outside C.
    return std::all_of(c.begin(), c.end(), [&](int v) { return !g.neighbors(v).is_subset_of(c); });
}

bool is_unmixed(const Graph& g) {
    const auto sets = maximal_independent_sets(g);
    return std::all_of(sets.begin(), sets.end(), [&](VertexSet s) { return s.size() == sets.front().size(); });
}

int height(const Graph& g) {
    int best = g.order();
    for (VertexSet c : minimal_vertex_covers(g)) best = std::min(best, c.size());
    return best;
}

VertexSet cover_C0(const Graph& g, const DimDecomposition& d) {
    VertexSet c0;
    for (const MatchedPair& p : d.pairs) {
        const int d1 = g.degree(p.x1);
        const int d2 = g.degree(p.x2);
        if (d1 >= 2 && d2 >= 2) {
            c0 |= VertexSet{p.x1, p.x2};
        } else if (d2 == 1) {
            c0.insert(p.x1);
        } else {
            c0.insert(p.x2);
        }
    }
    if (!is_minimal_vertex_cover(g, c0)) throw TheoremViolation("cover_C0 is not a minimal vertex cover");
    return c0;
}

std::vector<VertexSet> m2_candidates(const Graph& g, const DimDecomposition& d) {
    std::vector<VertexSet> out{VertexSet{}};
    for (const MatchedPair& p : d.pairs) {
        const std::size_t existing = out.size();
        for (int x : {p.x1, p.x2}) {
            if (g.degree(x) < 2) continue;
            for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] | VertexSet::singleton(x));
        }
    }
    std::sort(out.begin(), out.end(), BySizeThenBits{});
    return out;
}

VertexSet in_set(const Graph& g, const DimDecomposition& d, VertexSet u) {
    const VertexSet rest = g.vertices() - closed_neighborhood(g, u);
    VertexSet out;
    for (int w : d.w0 & rest) {
        if (!g.neighbors(w).intersects(rest)) out.insert(w);
    }
    return out;
}

std::vector<int> i_set(const Graph& g, const DimDecomposition& d, VertexSet m2) {
    const VertexSet n_m2 = open_neighborhood(g, m2);
    std::vector<int> out;
    for (int j = 0; j < d.m(); ++j) {
        const MatchedPair& p = d.pairs[j];
        if (g.degree(p.x1) < 2 || g.degree(p.x2) < 2) continue;
        const bool meets = m2.intersects(VertexSet{p.x1, p.x2});
        const bool side1 = (g.neighbors(p.x1) - VertexSet::singleton(p.x2)).is_subset_of(n_m2);
        const bool side2 = (g.neighbors(p.x2) - VertexSet::singleton(p.x1)).is_subset_of(n_m2);
        if (meets || side1 || side2) out.push_back(j);
    }
    return out;
}

int m2_prime(const Graph& g, const DimDecomposition& d, VertexSet m2) {
    const VertexSet rest = g.vertices() - closed_neighborhood(g, m2);
    int count = 0;
    for (const MatchedPair& p : d.pairs) {
        if (rest.contains(p.x1) && rest.contains(p.x2) && g.degree_within(p.x1, rest) >= 2 &&
            g.degree_within(p.x2, rest) >= 2) {
            ++count;
        }
    }
    return count;
}

FlatReport flat_check(const Graph& g, const DimDecomposition& d, bool stop_at_first_violation) {
    FlatReport report;
    for (VertexSet m2 : m2_candidates(g, d)) {
        FlatRecord r;
        r.m2 = m2;
        r.n_m2 = open_neighborhood(g, m2);
        r.m2_prime = m2_prime(g, d, m2);
        r.in = in_set(g, d, m2);
        r.flat1_lhs = d.m2 - r.m2_prime;
        r.flat1_rhs = r.n_m2.size() - m2.size();
        r.flat2_lhs = d.w0.size();
        r.flat2_rhs = 2 * d.m2 - r.n_m2.size() + m2.size() + r.in.size();
        report.records.push_back(r);
        if (!r.flat1() || !r.flat2()) {
            if (report.holds) report.first_violation = r;
            report.holds = false;
            if (stop_at_first_violation) break;
        }
    }
    return report;
}

} // namespace eil
