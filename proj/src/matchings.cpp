#include "eil/matchings.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "eil/errors.hpp"

namespace eil {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

VertexSet non_isolated_within(const Graph& g, VertexSet s) {
    VertexSet out;
    for (int v : s) {
        if (g.neighbors(v).intersects(s)) out.insert(v);
    }
    return out;
}

int min_degree_vertex(const Graph& g, VertexSet s) {
    int best = -1;
    int best_deg = kInfinity;
    for (int v : s) {
        const int d = g.degree_within(v, s);
        if (d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

// Memoised over vertex subsets; components are solved independently.
class MaxMatchingSolver {
public:
    explicit MaxMatchingSolver(const Graph& g) : g_(g) {}

    int solve(VertexSet s) {
        const VertexSet live = non_isolated_within(g_, s);
        if (live.empty()) return 0;
        if (auto it = memo_.find(live.bits()); it != memo_.end()) return it->second;
        const auto comps = connected_components(g_, live);
        int best = 0;
        if (comps.size() > 1) {
            for (VertexSet c : comps) best += solve(c);
        } else {
            // Any non-isolated vertex is covered by some maximum matching.
            const int v = min_degree_vertex(g_, live);
            const int cap = live.size() / 2;
            for (int u : g_.neighbors(v) & live) {
                best = std::max(best, 1 + solve(live - VertexSet{u, v}));
                if (best == cap) break;
            }
        }
        memo_.emplace(live.bits(), best);
        return best;
    }

private:
    const Graph& g_;
    std::unordered_map<std::uint64_t, int> memo_;
};

class InducedMatchingSolver {
public:
    explicit InducedMatchingSolver(const Graph& g) : g_(g) {}

    int solve(VertexSet s) {
        const VertexSet live = non_isolated_within(g_, s);
        if (live.empty()) return 0;
        if (auto it = memo_.find(live.bits()); it != memo_.end()) return it->second;
        const auto comps = connected_components(g_, live);
        int best = 0;
        if (comps.size() > 1) {
            for (VertexSet c : comps) best += solve(c);
        } else {
            const int v = min_degree_vertex(g_, live);
            best = solve(live - VertexSet::singleton(v));
            for (int u : g_.neighbors(v) & live) {
                best = std::max(best, 1 + solve(live - closed_neighborhood(g_, VertexSet{u, v})));
            }
        }
        memo_.emplace(live.bits(), best);
        return best;
    }

private:
    const Graph& g_;
    std::unordered_map<std::uint64_t, int> memo_;
};

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
        return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
    }
};

// Minimum number of edges that must be added so that the unmatched vertices of
// `avail` become independent, given that vertices of `forbidden` stay unmatched.
class MinMaximalSolver {
public:
    explicit MinMaximalSolver(const Graph& g) : g_(g) {}

    int solve(VertexSet avail, VertexSet forbidden) {
        const VertexSet live = non_isolated_within(g_, avail);
        forbidden &= live;
        if (live.empty()) return 0;
        for (int f : forbidden) {
            if (g_.neighbors(f).intersects(forbidden)) return kInfinity;
        }
        const auto key = std::make_pair(live.bits(), forbidden.bits());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int best = kInfinity;
        const auto comps = connected_components(g_, live);
        if (comps.size() > 1) {
            best = 0;
            for (VertexSet c : comps) {
                best += solve(c, forbidden & c);
                if (best >= kInfinity) {
                    best = kInfinity;
                    break;
                }
            }
        } else if (!forbidden.empty()) {
            // A forbidden vertex stays unmatched, so each of its neighbours gets matched.
            const int u = forbidden.first();
            const int v = (g_.neighbors(u) & live).first();
            for (int x : (g_.neighbors(v) & live) - forbidden) {
                best = std::min(best, 1 + solve(live - VertexSet{v, x}, forbidden));
            }
        } else {
            const int u = min_degree_vertex(g_, live);
            for (int w : g_.neighbors(u) & live) {
                best = std::min(best, 1 + solve(live - VertexSet{u, w}, forbidden));
            }
            best = std::min(best, solve(live, VertexSet::singleton(u)));
        }
        memo_.emplace(key, best);
        return best;
    }

private:
    const Graph& g_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, PairHash> memo_;
};

VertexSet endpoints_from(std::span<const Edge> edges, std::size_t from, VertexSet avail) {
    VertexSet out;
    for (std::size_t j = from; j < edges.size(); ++j) {
        if (edges[j].ends().is_subset_of(avail)) out |= edges[j].ends();
    }
    return out;
}

// Include-first DFS over the sorted edge list: the first solution reached is
// the lexicographically least one.
template <typename Solver, typename Block>
std::vector<Edge> lex_least_optimum(const Graph& g, int target, Block block) {
    const std::vector<Edge> edges = g.edges();
    Solver bound(g);
    std::vector<Edge> cur;
    auto dfs = [&](auto&& self, std::size_t idx, VertexSet avail) -> bool {
        if (static_cast<int>(cur.size()) == target) return true;
        if (idx == edges.size()) return false;
        if (static_cast<int>(cur.size()) + bound.solve(endpoints_from(edges, idx, avail)) < target) return false;
        const Edge& e = edges[idx];
        if (e.ends().is_subset_of(avail)) {
            cur.push_back(e);
            if (self(self, idx + 1, avail - block(e))) return true;
            cur.pop_back();
        }
        return self(self, idx + 1, avail);
    };
    if (!dfs(dfs, 0, g.vertices())) throw InternalError("lex-least search found no optimum");
    return cur;
}

} // namespace

bool is_matching(const Graph& g, std::span<const Edge> edges) {
    VertexSet used;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
        if (used.intersects(e.ends())) return false;
        used |= e.ends();
    }
    return true;
}

bool is_maximal_matching(const Graph& g, std::span<const Edge> edges) {
    if (!is_matching(g, edges)) return false;
    VertexSet used;
    for (const Edge& e : edges) used |= e.ends();
    return is_independent(g, g.vertices() - used);
}

bool is_induced_matching(const Graph& g, std::span<const Edge> edges) {
    if (!is_matching(g, edges)) return false;
    VertexSet used;
    for (const Edge& e : edges) used |= e.ends();
    // Inside the matched vertices, the only edges may be the matching edges.
    return static_cast<int>(g.edges_within(used).size()) == static_cast<int>(edges.size());
}

VertexSet Matching::vertices() const {
    VertexSet out;
    for (const Edge& e : edges) out |= e.ends();
    return out;
}

Matching make_matching(const Graph& g, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    if (!is_matching(g, edges)) throw InvalidInput("edge list is not a matching of the graph");
    Matching m;
    m.is_maximal = is_maximal_matching(g, edges);
    m.is_induced = is_induced_matching(g, edges);
    m.is_dominating_induced = m.is_maximal && m.is_induced;
    m.edges = std::move(edges);
    return m;
}

int matching_number(const Graph& g) { return MaxMatchingSolver(g).solve(g.vertices()); }

int induced_matching_number(const Graph& g) { return InducedMatchingSolver(g).solve(g.vertices()); }

int min_matching_number(const Graph& g) { return MinMaximalSolver(g).solve(g.vertices(), VertexSet{}); }

std::vector<Edge> maximum_matching(const Graph& g) {
    return lex_least_optimum<MaxMatchingSolver>(g, matching_number(g), [](const Edge& e) { return e.ends(); });
}

std::vector<Edge> maximum_induced_matching(const Graph& g) {
    return lex_least_optimum<InducedMatchingSolver>(
        g, induced_matching_number(g), [&g](const Edge& e) { return closed_neighborhood(g, e.ends()); });
}

std::vector<Edge> minimum_maximal_matching(const Graph& g) {
    const int target = min_matching_number(g);
    const std::vector<Edge> edges = g.edges();
    std::vector<Edge> cur;

    // Edges with both ends unmatched must be met by a later chosen edge.
    auto hopeless = [&](std::size_t idx, VertexSet matched) {
        const VertexSet free = g.vertices() - matched;
        VertexSet reachable;
        for (std::size_t j = idx; j < edges.size(); ++j) {
            if (edges[j].ends().is_subset_of(free)) reachable |= edges[j].ends();
        }
        VertexSet greedy_used;
        int greedy = 0;
        for (const Edge& f : g.edges_within(free)) {
            if (!f.ends().intersects(reachable)) return true;
            if (!f.ends().intersects(greedy_used)) {
                greedy_used |= f.ends();
                ++greedy;
            }
        }
        // Each new edge meets at most two edges of a matching among uncovered edges.
        return static_cast<int>(cur.size()) + (greedy + 1) / 2 > target;
    };

    auto dfs = [&](auto&& self, std::size_t idx, VertexSet matched) -> bool {
        if (static_cast<int>(cur.size()) == target) return is_independent(g, g.vertices() - matched);
        if (idx == edges.size() || hopeless(idx, matched)) return false;
        const Edge& e = edges[idx];
        if (!e.ends().intersects(matched)) {
            cur.push_back(e);
            if (self(self, idx + 1, matched | e.ends())) return true;
            cur.pop_back();
        }
        return self(self, idx + 1, matched);
    };
    if (!dfs(dfs, 0, VertexSet{})) throw InternalError("lex-least search found no minimum maximal matching");
    return cur;
}

DimEnumeration enumerate_dims(const Graph& g, DimStrategy strategy, std::size_t limit) {
    DimEnumeration out;
    auto emit = [&](std::vector<Edge> edges) {
        if (out.dims.size() >= limit) {
            out.truncated = true;
            return false;
        }
        out.dims.push_back(make_matching(g, std::move(edges)));
        return true;
    };

    if (strategy == DimStrategy::Direct) {
        const std::vector<Edge> edges = g.edges();
        std::vector<Edge> cur;
        auto dfs = [&](auto&& self, std::size_t idx, VertexSet avail) -> bool {
            if (idx == edges.size()) {
                if (is_maximal_matching(g, cur)) return emit(cur);
                return true;
            }
            const Edge& e = edges[idx];
            if (e.ends().is_subset_of(avail)) {
                cur.push_back(e);
                const bool go_on = self(self, idx + 1, avail - closed_neighborhood(g, e.ends()));
                cur.pop_back();
                if (!go_on) return false;
            }
            return self(self, idx + 1, avail);
        };
        dfs(dfs, 0, g.vertices());
    } else {
        const int n = g.order();
        // Every vertex outside W must end with exactly one neighbour outside W.
        auto consistent = [&](VertexSet in_w, VertexSet out_w, VertexSet undecided) {
            for (int x : out_w) {
                const int outs = (g.neighbors(x) & out_w).size();
                if (outs > 1) return false;
                if (outs == 0 && !g.neighbors(x).intersects(undecided)) return false;
            }
            return is_independent(g, in_w);
        };
        auto dfs = [&](auto&& self, int v, VertexSet in_w, VertexSet out_w) -> bool {
            const VertexSet undecided = g.vertices() - in_w - out_w;
            if (!consistent(in_w, out_w, undecided)) return true;
            if (v == n) return emit(g.edges_within(out_w));
            if (!g.neighbors(v).intersects(in_w)) {
                if (!self(self, v + 1, in_w | VertexSet::singleton(v), out_w)) return false;
            }
            return self(self, v + 1, in_w, out_w | VertexSet::singleton(v));
        };
        dfs(dfs, 0, VertexSet{}, VertexSet{});
    }
    std::sort(out.dims.begin(), out.dims.end(),
              [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
    return out;
}

bool has_dominating_induced_matching(const Graph& g) { return !enumerate_dims(g, DimStrategy::Direct, 1).dims.empty(); }

VertexSet DimDecomposition::matched_vertices() const {
    VertexSet out;
    for (const MatchedPair& p : pairs) out |= VertexSet{p.x1, p.x2};
    return out;
}

int DimDecomposition::pair_of(int v) const {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (pairs[j].x1 == v || pairs[j].x2 == v) return static_cast<int>(j);
    }
    return -1;
}

DimDecomposition dim_decomposition(const Graph& g, std::span<const Edge> dim) {
    if (!is_induced_matching(g, dim)) throw PreconditionError("dim_decomposition: not an induced matching");
    if (!is_maximal_matching(g, dim)) throw PreconditionError("dim_decomposition: not a maximal matching");
    DimDecomposition d;
    for (const Edge& e : dim) d.pairs.push_back({e.u, e.v});
    std::sort(d.pairs.begin(), d.pairs.end(),
              [](const MatchedPair& a, const MatchedPair& b) { return std::pair(a.x1, a.x2) < std::pair(b.x1, b.x2); });
    d.w = g.vertices() - d.matched_vertices();
    d.w0 = d.w - isolated_vertices(g);
    for (const MatchedPair& p : d.pairs) {
        if (g.degree(p.x1) == 1 || g.degree(p.x2) == 1) {
            ++d.m1;
        } else {
            ++d.m2;
        }
    }
    return d;
}

DimDecomposition dim_decomposition(const Graph& g, const Matching& dim) { return dim_decomposition(g, dim.edges); }

bool validate_dim_decomposition(const Graph& g, const DimDecomposition& d) {
    std::vector<Edge> edges;
    for (const MatchedPair& p : d.pairs) {
        if (p.x1 >= p.x2) return false;
        edges.emplace_back(p.x1, p.x2);
    }
    if (!is_induced_matching(g, edges) || !is_maximal_matching(g, edges)) return false;
    if (d.w != g.vertices() - d.matched_vertices()) return false;
    if (!is_independent(g, d.w)) return false;
    if (d.w0 != d.w - isolated_vertices(g)) return false;
    int m1 = 0;
    for (const MatchedPair& p : d.pairs) m1 += (g.degree(p.x1) == 1 || g.degree(p.x2) == 1) ? 1 : 0;
    return d.m1 == m1 && d.m2 == d.m() - m1;
}

std::vector<int> pair_induced_with_maximal(std::span<const Edge> induced, std::span<const Edge> maximal) {
    std::vector<int> out;
    out.reserve(induced.size());
    for (const Edge& e : induced) {
        int hit = -1;
        for (std::size_t i = 0; i < maximal.size(); ++i) {
            if (maximal[i].ends().intersects(e.ends())) {
                hit = static_cast<int>(i);
                break;
            }
        }
        out.push_back(hit);
    }
    return out;
}

namespace {

std::optional<EqEdgeType> classify_eq_edge(const EqPartition& p, const Edge& e) {
    auto in = [](const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); };
    if (in(p.z, e.u) || in(p.z, e.v)) return EqEdgeType::I;
    auto end_of_beta_pair = [&](int x) {
        for (int i = p.alpha; i < p.alpha + p.beta; ++i) {
            if (p.v[i].first == x || p.v[i].second == x) return true;
        }
        return false;
    };
    auto v1_of_alpha_pair = [&](int x) {
        for (int i = 0; i < p.alpha; ++i) {
            if (p.v[i].first == x) return true;
        }
        return false;
    };
    for (auto [a, b] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
        if (end_of_beta_pair(a) && in(p.w, b)) return EqEdgeType::II;
    }
    for (auto [a, b] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
        if (v1_of_alpha_pair(a) && in(p.w, b)) return EqEdgeType::III;
    }
    return std::nullopt;
}

} // namespace

std::optional<EqPartition> eq_partition(const Graph& g) {
    const std::vector<Edge> m = maximum_induced_matching(g);
    const std::vector<Edge> mp = minimum_maximal_matching(g);
    if (m.size() != mp.size()) return std::nullopt;

    const std::vector<int> hit = pair_induced_with_maximal(m, mp);
    std::vector<int> sorted_hit = hit;
    std::sort(sorted_hit.begin(), sorted_hit.end());
    if (std::adjacent_find(sorted_hit.begin(), sorted_hit.end()) != sorted_hit.end() ||
        (!sorted_hit.empty() && sorted_hit.front() < 0)) {
        throw TheoremViolation("eq_partition: induced/maximal pairing is not a bijection");
    }

    EqPartition p;
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (mp[hit[k]] != m[k]) order.push_back(k);
    }
    p.alpha = static_cast<int>(order.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (mp[hit[k]] == m[k]) order.push_back(k);
    }
    p.beta = static_cast<int>(m.size()) - p.alpha;

    VertexSet used;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const Edge& e = m[order[pos]];
        const Edge& f = mp[hit[order[pos]]];
        used |= e.ends() | f.ends();
        if (static_cast<int>(pos) < p.alpha) {
            const VertexSet shared = e.ends() & f.ends();
            if (shared.size() != 1) throw TheoremViolation("eq_partition: paired edges share no single vertex");
            const int v1 = shared.first();
            p.v.emplace_back(v1, e.other(v1));
            p.z.push_back(f.other(v1));
        } else {
            p.v.emplace_back(e.u, e.v);
        }
    }
    p.w = (g.vertices() - used).to_vector();
    p.gamma = static_cast<int>(p.w.size());

    std::vector<Edge> skeleton;
    for (const auto& [a, b] : p.v) skeleton.emplace_back(a, b);
    for (int i = 0; i < p.alpha; ++i) skeleton.emplace_back(p.v[i].first, p.z[i]);
    for (const Edge& e : g.edges()) {
        if (std::find(skeleton.begin(), skeleton.end(), e) != skeleton.end()) continue;
        const auto type = classify_eq_edge(p, e);
        if (!type) throw TheoremViolation("eq_partition: edge fits none of the three types");
        p.e_prime.push_back({e, *type});
    }
    if (!verify_eq_partition(g, p)) throw TheoremViolation("eq_partition: constructed partition fails verification");
    return p;
}

bool verify_eq_partition(const Graph& g, const EqPartition& p) {
    if (p.alpha < 0 || p.beta < 0 || p.gamma < 0) return false;
    if (static_cast<int>(p.v.size()) != p.alpha + p.beta || static_cast<int>(p.z.size()) != p.alpha ||
        static_cast<int>(p.w.size()) != p.gamma) {
        return false;
    }
    VertexSet seen;
    auto claim = [&](int x) {
        if (x < 0 || x >= g.order() || seen.contains(x)) return false;
        seen.insert(x);
        return true;
    };
    for (const auto& [a, b] : p.v) {
        if (!claim(a) || !claim(b)) return false;
    }
    for (int x : p.z) {
        if (!claim(x)) return false;
    }
    for (int x : p.w) {
        if (!claim(x)) return false;
    }
    if (seen != g.vertices()) return false;

    std::vector<Edge> skeleton;
    for (const auto& [a, b] : p.v) {
        if (!g.adjacent(a, b)) return false;
        skeleton.emplace_back(a, b);
    }
    for (int i = 0; i < p.alpha; ++i) {
        if (!g.adjacent(p.v[i].first, p.z[i])) return false;
        skeleton.emplace_back(p.v[i].first, p.z[i]);
    }
    std::vector<Edge> rest;
    for (const TaggedEdge& t : p.e_prime) {
        if (!g.adjacent(t.edge.u, t.edge.v)) return false;
        if (classify_eq_edge(p, t.edge) != t.type) return false;
        rest.push_back(t.edge);
    }
    std::vector<Edge> all = skeleton;
    all.insert(all.end(), rest.begin(), rest.end());
    std::sort(all.begin(), all.end());
    return all == g.edges();
}

} // namespace eil
