#include "eil/census.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "eil/errors.hpp"
#include "eil/graph_io.hpp"
#include "eil/homology.hpp"
#include "eil/matchings.hpp"

namespace eil {

namespace {

using Partition = std::vector<std::vector<int>>;
using Perm = std::vector<int>;

// Sort vertices by (cell, neighbour counts per cell) until the cell count is stable.
Partition refine(const Graph& g, Partition p) {
    const int n = g.order();
    std::vector<int> cell_of(n);
    while (true) {
        for (int c = 0; c < static_cast<int>(p.size()); ++c) {
            for (int v : p[c]) cell_of[v] = c;
        }
        std::map<std::vector<int>, std::vector<int>> buckets;
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig(p.size() + 1, 0);
            sig[0] = cell_of[v];
            for (int u : g.neighbors(v)) ++sig[cell_of[u] + 1];
            buckets[std::move(sig)].push_back(v);
        }
        if (buckets.size() == p.size()) return p;
        Partition next;
        next.reserve(buckets.size());
        for (auto& [sig, cell] : buckets) next.push_back(std::move(cell));
        p = std::move(next);
    }
}

// Upper triangle in graph6 bit order, first bit most significant. n <= 10 fits in 45 bits.
std::uint64_t code_of(const Graph& g, const Perm& vertex_at) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(vertex_at[i], vertex_at[j]) ? 1 : 0);
    }
    return code;
}

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g) {}

    Perm run() {
        Partition root(1);
        root[0].resize(g_.order());
        std::iota(root[0].begin(), root[0].end(), 0);
        search(refine(g_, std::move(root)), {});
        return best_;
    }

private:
    void search(const Partition& p, std::vector<int> fixed) {
        if (p.size() == static_cast<std::size_t>(g_.order())) {
            leaf(p);
            return;
        }
        std::size_t target = p.size();
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (p[c].size() > 1 && (target == p.size() || p[c].size() < p[target].size())) target = c;
        }
        std::vector<int> tried;
        for (int v : p[target]) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return same_orbit(u, v, fixed); })) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t c = 0; c < p.size(); ++c) {
                if (c != target) {
                    child.push_back(p[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : p[c]) {
                    if (u != v) rest.push_back(u);
                }
                child.push_back(std::move(rest));
            }
            fixed.push_back(v);
            search(refine(g_, std::move(child)), fixed);
            fixed.pop_back();
        }
    }

    void leaf(const Partition& p) {
        Perm vertex_at(g_.order());
        for (std::size_t c = 0; c < p.size(); ++c) vertex_at[c] = p[c][0];
        const std::uint64_t code = code_of(g_, vertex_at);
        if (best_.empty() || code < best_code_) {
            best_code_ = code;
            best_ = vertex_at;
        } else if (code == best_code_) {
            // Same adjacency string: best_[i] -> vertex_at[i] is an automorphism.
            Perm gamma(g_.order());
            for (int i = 0; i < g_.order(); ++i) gamma[best_[i]] = vertex_at[i];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    // Orbits of the group generated by the known automorphisms fixing `fixed` pointwise.
    bool same_orbit(int a, int b, const std::vector<int>& fixed) const {
        const int n = g_.order();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Perm& gamma : automorphisms_) {
            if (!std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; })) continue;
            for (int x = 0; x < n; ++x) parent[find(x)] = find(gamma[x]);
        }
        return find(a) == find(b);
    }

    const Graph& g_;
    Perm best_;
    std::uint64_t best_code_ = 0;
    std::vector<Perm> automorphisms_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) {
        throw InvalidInput("canonical_form: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                           std::to_string(kMaxCanonicalOrder));
    }
    CanonicalForm out;
    out.labeling.assign(g.order(), 0);
    if (g.order() == 0) {
        out.graph6 = write_graph6(g);
        return out;
    }
    const Perm vertex_at = Canonizer(g).run();
    for (int i = 0; i < g.order(); ++i) out.labeling[vertex_at[i]] = i;
    out.graph6 = write_graph6(relabel(g, out.labeling));
    return out;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

const std::vector<Graph>& connected_graphs(int n) {
    if (n < 1 || n > kMaxCensusOrder) {
        throw InvalidInput("connected_graphs: n must lie in [1, " + std::to_string(kMaxCensusOrder) + "]");
    }
    static std::mutex lock;
    static std::array<std::vector<Graph>, kMaxCensusOrder + 1> levels;
    static std::array<bool, kMaxCensusOrder + 1> done{};
    const std::lock_guard guard(lock);
    if (!done[1]) {
        levels[1] = {Graph(1)};
        done[1] = true;
    }
    for (int k = 2; k <= n; ++k) {
        if (done[k]) continue;
        // Every connected graph has a non-cut vertex, so adding a vertex to each
        // connected parent in every way reaches every class.
        std::set<std::string> seen;
        for (const Graph& parent : levels[k - 1]) {
            for (std::uint64_t s = 1; s < (std::uint64_t{1} << (k - 1)); ++s) {
                Graph child(k);
                for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
                for (int u : VertexSet(s)) child.add_edge(u, k - 1);
                seen.insert(canonical_form(child).graph6);
            }
        }
        levels[k].clear();
        for (const std::string& code : seen) levels[k].push_back(parse_graph6(code));
        done[k] = true;
    }
    return levels[n];
}

std::vector<Graph> connected_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        const auto& level = connected_graphs(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> verify_case_v_census(int n_max, const Field& field) {
    std::vector<Graph> out;
    for (const Graph& g : connected_graphs_up_to(n_max)) {
        const int match = matching_number(g);
        if (match <= induced_matching_number(g)) continue;
        // reg <= min-match <= match, so equality forces min-match = match.
        if (min_matching_number(g) != match) continue;
        if (regularity(g, field) == match) out.push_back(g);
    }
    return out;
}

} // namespace eil
