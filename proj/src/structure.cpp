#include "eil/structure.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "eil/covers.hpp"
#include "eil/errors.hpp"

namespace eil {

bool is_chordal(const Graph& g) {
    VertexSet live = g.vertices();
    while (!live.empty()) {
        bool removed = false;
        for (int v : live) {
            const VertexSet nb = g.neighbors(v) & live;
            bool clique = true;
            for (int u : nb) {
                if (!(nb - VertexSet::singleton(u)).is_subset_of(g.neighbors(u))) {
                    clique = false;
                    break;
                }
            }
            if (clique) {
                live.erase(v);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

Graph tilde_graph(const Graph& g, const DimDecomposition& d) {
    const std::vector<int> w = d.w.to_vector();
    const int r = static_cast<int>(w.size());
    Graph t(r + d.m());
    for (int j = 0; j < d.m(); ++j) {
        const VertexSet touched = (g.neighbors(d.pairs[j].x1) | g.neighbors(d.pairs[j].x2)) & d.w;
        for (int a = 0; a < r; ++a) {
            if (touched.contains(w[a])) t.add_edge(a, r + j);
        }
    }
    return t;
}

bool is_forest(const Graph& g) {
    return g.size() + static_cast<int>(connected_components(g).size()) == g.order();
}

bool is_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != n - 1) return false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) return true;
    }
    return false;
}

bool is_star_triangle(const Graph& g) {
    const int n = g.order();
    if (n < 3 || n % 2 == 0 || g.size() != 3 * (n - 1) / 2) return false;
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) != n - 1) continue;
        // Removing the centre must leave a perfect matching.
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (v != c) ok = g.degree(v) == 2;
        }
        if (ok) return true;
    }
    return false;
}

bool is_cameron_walker(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return false;
    if (is_star(g) || is_star_triangle(g)) return false;
    return induced_matching_number(g) == matching_number(g);
}

std::vector<PendantTriangle> pendant_triangles(const Graph& g) {
    std::vector<PendantTriangle> out;
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
        const VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
        if (common.size() != 1) continue;
        const int apex = common.first();
        if (g.degree(apex) > 2) out.push_back({apex, e.u, e.v});
    }
    std::sort(out.begin(), out.end(), [](const PendantTriangle& a, const PendantTriangle& b) {
        return std::tie(a.apex, a.v1, a.v2) < std::tie(b.apex, b.v1, b.v2);
    });
    return out;
}

int pendant_triangles_at(const Graph& g, int apex) {
    const auto all = pendant_triangles(g);
    return static_cast<int>(std::count_if(all.begin(), all.end(), [&](const PendantTriangle& t) {
        return t.apex == apex;
    }));
}

namespace {

bool shedding_within(const Graph& g, VertexSet live, int v) {
    const VertexSet nb = g.neighbors(v) & live;
    const VertexSet rest = live - closed_neighborhood(g, VertexSet::singleton(v));
    for (VertexSet s : maximal_independent_sets_within(g, rest)) {
        const bool extendable = std::any_of(nb.begin(), nb.end(), [&](int w) { return !g.neighbors(w).intersects(s); });
        if (!extendable) return false;
    }
    return true;
}

class VdSolver {
public:
    explicit VdSolver(const Graph& g) : g_(g) {}

    bool solve(VertexSet live) {
        VertexSet core;
        for (int v : live) {
            if (g_.neighbors(v).intersects(live)) core.insert(v);
        }
        if (core.empty()) return true;
        if (auto it = memo_.find(core.bits()); it != memo_.end()) return it->second;

        std::vector<int> order = core.to_vector();
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g_.degree_within(a, core) > g_.degree_within(b, core); });
        bool result = false;
        for (int v : order) {
            if (!shedding_within(g_, core, v)) continue;
            if (solve(core - VertexSet::singleton(v)) &&
                solve(core - closed_neighborhood(g_, VertexSet::singleton(v)))) {
                result = true;
                break;
            }
        }
        memo_.emplace(core.bits(), result);
        return result;
    }

private:
    const Graph& g_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace

bool is_shedding_vertex(const Graph& g, int v) { return shedding_within(g, g.vertices(), v); }

bool shedding_shortcut(const Graph& g, int v) {
    const VertexSet nv = closed_neighborhood(g, VertexSet::singleton(v));
    for (int w : g.neighbors(v)) {
        if (closed_neighborhood(g, VertexSet::singleton(w)).is_subset_of(nv)) return true;
    }
    return false;
}

bool is_vertex_decomposable(const Graph& g, int max_vertices) {
    if (g.order() > max_vertices) {
        throw BudgetExceeded("is_vertex_decomposable: " + std::to_string(g.order()) + " vertices exceeds the budget of " +
                             std::to_string(max_vertices));
    }
    VdSolver solver(g);
    return solver.solve(g.vertices());
}

std::string to_string(DimVdTag tag) {
    switch (tag) {
    case DimVdTag::I: return "i";
    case DimVdTag::II: return "ii";
    case DimVdTag::III: return "iii";
    case DimVdTag::IV: return "iv";
    case DimVdTag::None: break;
    }
    return "none";
}

namespace {

DimVdPairTag classify_pair(const Graph& g, const DimDecomposition& d, const MatchedPair& p) {
    const int d1 = g.degree(p.x1);
    const int d2 = g.degree(p.x2);
    const VertexSet both = VertexSet{p.x1, p.x2};
    const VertexSet common = g.neighbors(p.x1) & g.neighbors(p.x2) & d.w;

    if (d1 == 1 || d2 == 1) return {DimVdTag::I, {}};
    if (d1 == 2 && d2 == 2 && !common.empty()) return {DimVdTag::II, {common.first()}};

    // y in W with N(y) = {x1, x2}
    VertexSet private_y;
    for (int y : common) {
        if (g.neighbors(y) == both) private_y.insert(y);
    }
    if (((d1 == 3 && d2 == 2) || (d1 == 2 && d2 == 3)) && !private_y.empty()) {
        return {DimVdTag::III, {private_y.first()}};
    }
    if (d1 == 3 && d2 == 3) {
        for (int y3 : private_y) {
            for (int y1 : (g.neighbors(p.x1) & d.w) - VertexSet{y3}) {
                for (int y2 : (g.neighbors(p.x2) & d.w) - VertexSet{y3, y1}) {
                    if (pendant_triangles_at(g, y1) > 0 || pendant_triangles_at(g, y2) > 0) {
                        return {DimVdTag::IV, {y1, y2, y3}};
                    }
                }
            }
        }
    }
    return {DimVdTag::None, {}};
}

} // namespace

DimVdClassification dimvd_class_check(const Graph& g, const DimDecomposition& d) {
    DimVdClassification out;
    out.in_class = true;
    for (const MatchedPair& p : d.pairs) {
        out.pairs.push_back(classify_pair(g, d, p));
        if (out.pairs.back().tag == DimVdTag::None) out.in_class = false;
    }
    return out;
}

bool dimvd_cm_criterion(const Graph& g, const DimDecomposition& d) {
    if (!is_connected(g)) throw PreconditionError("dimvd_cm_criterion: graph is not connected");
    if (d.w.empty()) throw PreconditionError("dimvd_cm_criterion: W is empty");
    if (!dimvd_class_check(g, d).in_class) {
        throw PreconditionError("dimvd_cm_criterion: some matched pair meets none of conditions (i)-(iv)");
    }
    if (d.w.size() != d.m2) return false;
    for (int y : d.w) {
        int triangles = 0;
        for (const MatchedPair& p : d.pairs) {
            if (g.adjacent(y, p.x1) && g.adjacent(y, p.x2)) ++triangles;
        }
        if (triangles != 1) return false;
    }
    return true;
}

} // namespace eil
