#include "eil/homology.hpp"

#include <algorithm>
#include <string>

#include "eil/covers.hpp"
#include "eil/errors.hpp"

namespace eil {

namespace {

void check_budget(const Graph& g, int budget_bits, const char* what) {
    if (g.order() > budget_bits) {
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds the " +
                             std::to_string(budget_bits) + "-bit sweep budget");
    }
}

std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    if (std::all_of(out.begin(), out.end(), [](std::int64_t c) { return c == 0; })) out.clear();
    return out;
}

bool has_isolated_vertex(const Graph& g, VertexSet w) {
    return std::any_of(w.begin(), w.end(), [&](int v) { return !g.neighbors(v).intersects(w); });
}

// Independent subsets of `within`, grouped by size.
std::vector<std::vector<VertexSet>> independent_sets_by_size(const Graph& g, VertexSet within) {
    std::vector<std::vector<VertexSet>> out(1, std::vector<VertexSet>{VertexSet{}});
    const std::vector<int> order = within.to_vector();
    auto dfs = [&](auto&& self, std::size_t idx, VertexSet cur, VertexSet allowed) -> void {
        for (std::size_t k = idx; k < order.size(); ++k) {
            const int v = order[k];
            if (!allowed.contains(v)) continue;
            const VertexSet next = cur | VertexSet::singleton(v);
            if (out.size() <= static_cast<std::size_t>(next.size())) out.emplace_back();
            out[next.size()].push_back(next);
            self(self, k + 1, next, allowed - closed_neighborhood(g, VertexSet::singleton(v)));
        }
    };
    dfs(dfs, 0, VertexSet{}, within);
    for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
    return out;
}

int degree_of(const std::vector<std::int64_t>& q) { return static_cast<int>(q.size()) - 1; }

} // namespace

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex::from_facets(g.order(), maximal_independent_sets(g));
}

const IndependenceHomology::Entry& IndependenceHomology::component(VertexSet c) {
    if (auto it = cache_.find(c.bits()); it != cache_.end()) return it->second;
    Entry e;
    if (c.size() == 1) {
        e.alpha = 1; // a point is contractible
    } else {
        const auto faces = independent_sets_by_size(g_, c);
        e.alpha = static_cast<int>(faces.size()) - 1;
        e.q = reduced_homology_from_faces(faces, field_);
        while (!e.q.empty() && e.q.back() == 0) e.q.pop_back();
        if (std::all_of(e.q.begin(), e.q.end(), [](std::int64_t x) { return x == 0; })) e.q.clear();
    }
    return cache_.emplace(c.bits(), std::move(e)).first->second;
}

std::vector<std::int64_t> IndependenceHomology::q_polynomial(VertexSet w) {
    std::vector<std::int64_t> q{1};
    if (has_isolated_vertex(g_, w)) return {};
    for (VertexSet c : connected_components(g_, w)) {
        q = multiply(q, component(c).q);
        if (q.empty()) break;
    }
    return q;
}

int IndependenceHomology::independence_number(VertexSet w) {
    int alpha = 0;
    for (VertexSet c : connected_components(g_, w)) alpha += component(c).alpha;
    return alpha;
}

BettiTable hochster_betti(const Graph& g, const Field& field, int budget_bits) {
    check_budget(g, budget_bits, "hochster_betti");
    IndependenceHomology hom(g, field);
    BettiTable table;
    table.field = field;
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t bits = 0;; bits = (bits - full) & full) {
        const VertexSet w(bits);
        const auto q = hom.q_polynomial(w);
        const int j = w.size();
        for (std::size_t e = 0; e < q.size(); ++e) table.add(j - static_cast<int>(e), j, q[e]);
        if (bits == full) break;
    }
    return table;
}

int regularity(const Graph& g, const Field& field, int budget_bits) {
    check_budget(g, budget_bits, "regularity");
    IndependenceHomology hom(g, field);
    int reg = 0;
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t bits = 0;; bits = (bits - full) & full) {
        const VertexSet w(bits);
        // A subset smaller than 2·(reg+1) cannot raise the maximum.
        if (w.size() >= 2 * (reg + 1)) reg = std::max(reg, degree_of(hom.q_polynomial(w)));
        if (bits == full) break;
    }
    return reg;
}

bool reisner_cm(const Graph& g, const Field& field, int budget_bits) {
    check_budget(g, budget_bits, "reisner_cm");
    IndependenceHomology hom(g, field);
    std::unordered_map<std::uint64_t, bool> seen;
    const auto faces = independent_sets_by_size(g, g.vertices());
    for (const auto& bucket : faces) {
        for (VertexSet sigma : bucket) {
            const VertexSet rest = g.vertices() - closed_neighborhood(g, sigma);
            if (seen.contains(rest.bits())) continue;
            const auto q = hom.q_polynomial(rest);
            const int alpha = hom.independence_number(rest);
            bool ok = true;
            for (std::size_t e = 0; e < q.size(); ++e) ok = ok && (q[e] == 0 || static_cast<int>(e) == alpha);
            if (!ok) return false;
            seen.emplace(rest.bits(), true);
        }
    }
    return true;
}

bool duval_scm(const Graph& g, const Field& field, int budget_bits) {
    check_budget(g, budget_bits, "duval_scm");
    return is_sequentially_cohen_macaulay(independence_complex(g), field);
}

WoodroofeWitness woodroofe_witness(const Graph& g, int budget_bits) {
    check_budget(g, budget_bits, "reg_lower_bound_woodroofe");
    WoodroofeWitness best;
    auto evaluate = [&](VertexSet s) {
        WoodroofeWitness w;
        for (VertexSet c : connected_components(g, s)) {
            const int size = c.size();
            const int edges = static_cast<int>(g.edges_within(c).size());
            if (size == 2) {
                ++w.edges;
                w.vertices |= c;
            } else if (size >= 5 && edges == size && size % 3 == 2) {
                w.cycle_lengths.push_back(size);
                w.vertices |= c;
            }
        }
        w.bound = w.edges;
        for (int len : w.cycle_lengths) w.bound += (len - 2) / 3 + 1;
        if (w.bound > best.bound) best = w;
    };
    const int n = g.order();
    // Induced degree stays at most 2, so components are paths and cycles.
    auto dfs = [&](auto&& self, int v, VertexSet s) -> void {
        if (v == n) {
            evaluate(s);
            return;
        }
        self(self, v + 1, s);
        const VertexSet with = s | VertexSet::singleton(v);
        bool ok = g.degree_within(v, with) <= 2;
        for (int u : g.neighbors(v) & s) ok = ok && g.degree_within(u, with) <= 2;
        if (ok) self(self, v + 1, with);
    };
    dfs(dfs, 0, VertexSet{});
    return best;
}

int reg_lower_bound_woodroofe(const Graph& g, int budget_bits) { return woodroofe_witness(g, budget_bits).bound; }

SubadditivityReport km_subadditivity(const Graph& g, const std::vector<std::vector<Edge>>& parts,
                                     const Field& field) {
    std::vector<Edge> covered;
    SubadditivityReport report;
    for (const auto& part : parts) {
        Graph h(g.order());
        for (const Edge& e : part) {
            if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
                throw InvalidInput("km_subadditivity: part contains a non-edge");
            }
            if (!h.adjacent(e.u, e.v)) h.add_edge(e.u, e.v);
            covered.push_back(e);
        }
        report.part_regularities.push_back(regularity(h, field));
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    if (covered != g.edges()) throw InvalidInput("km_subadditivity: parts do not cover E(G)");
    report.regularity = regularity(g, field);
    for (int r : report.part_regularities) report.bound += r;
    report.holds = report.regularity <= report.bound;
    return report;
}

bool km_subadditivity_check(const Graph& g, const std::vector<std::vector<Edge>>& parts, const Field& field) {
    return km_subadditivity(g, parts, field).holds;
}

} // namespace eil
