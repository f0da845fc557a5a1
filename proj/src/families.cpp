#include "eil/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "eil/errors.hpp"
#include "eil/structure.hpp"

namespace eil {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput(what);
}

// Appends a cycle of the given length through `anchor`, using fresh vertices.
int attach_cycle(Graph& g, int anchor, int next, int length) {
    int prev = anchor;
    for (int s = 1; s < length; ++s) {
        g.add_edge(prev, next);
        prev = next++;
    }
    g.add_edge(prev, anchor);
    return next;
}

} // namespace

Graph path_graph(int n) {
    require(n >= 1, "Path{n}: n must be at least 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "Cycle{n}: n must be at least 3");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    require(n >= 1, "Complete{n}: n must be at least 1");
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph star_graph(int r) {
    require(r >= 1, "Star{r}: r must be at least 1");
    Graph g(r + 1);
    for (int i = 1; i <= r; ++i) g.add_edge(0, i);
    return g;
}

Graph whiskered_complete(int n) {
    require(n >= 3 && 2 * n <= Graph::kMaxVertices, "WhiskeredComplete{n}: need 3 <= n <= 32");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        g.add_edge(i, n + i);
    }
    return g;
}

Graph gab_graph(int a, int b) {
    require(a >= 0 && b >= 0, "Gab{a,b}: a, b must be non-negative");
    const int order = 1 + (a + b + 1) + 4 * (a + 1) + 3 * b;
    require(order <= Graph::kMaxVertices, "Gab{a,b}: more than 64 vertices");
    Graph g(order);
    int next = a + b + 2;
    for (int i = 1; i <= a + b + 1; ++i) {
        g.add_edge(0, i);
        next = attach_cycle(g, i, next, i <= a + 1 ? 5 : 4);
    }
    return g;
}

Graph gabmn_graph(int a, int b, int m, int n) {
    require(a >= 0 && b >= 0 && n >= 1 && m >= 0 && m <= n, "Gabmn{a,b,m,n}: need a, b >= 0 and 0 <= m <= n, n >= 1");
    const int order = 2 * n + 2 * m + 5 * a + 3 * b;
    require(order <= Graph::kMaxVertices, "Gabmn{a,b,m,n}: more than 64 vertices");
    Graph g(order);
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = i + 1; j < 2 * n; ++j) g.add_edge(i, j);
    }
    int next = 2 * n;
    for (int c = 2 * n - 2 * m; c < 2 * n; ++c) g.add_edge(c, next++);
    for (int t = 0; t < a; ++t) {
        const int A = next, B = next + 1, C = next + 2, D = next + 3, E = next + 4;
        g.add_edge(0, A);
        g.add_edge(A, B);
        g.add_edge(A, D);
        g.add_edge(B, C);
        g.add_edge(B, E);
        next += 5;
    }
    for (int t = 0; t < b; ++t) {
        g.add_edge(0, next);
        g.add_edge(next, next + 1);
        g.add_edge(next + 1, next + 2);
        next += 3;
    }
    return g;
}

Graph hk_graph(int k) {
    require(k >= 2 && 4 * k + 2 <= Graph::kMaxVertices, "Hk{k}: need 2 <= k <= 15");
    Graph g(4 * k + 2);
    for (int i = 1; i <= k; ++i) {
        const int x = 1 + i, y = 1 + k + i, z1 = 2 * k + 2 * i, z2 = z1 + 1;
        g.add_edge(0, x);
        g.add_edge(1, y);
        g.add_edge(x, z1);
        g.add_edge(x, z2);
        g.add_edge(y, z1);
        g.add_edge(y, z2);
    }
    return g;
}

Graph hk_prime_graph(int k) {
    require(k >= 2 && 3 * k + 2 <= Graph::kMaxVertices, "HkPrime{k}: need 2 <= k <= 20");
    Graph g(3 * k + 2);
    for (char f : {'e', 'f', 'g', 'h'}) {
        for (int i = 1; i <= k; ++i) {
            const Edge e = hk_prime_edge(k, f, i);
            g.add_edge(e.u, e.v);
        }
    }
    return g;
}

Graph named_graph(std::string_view name) {
    using E = std::vector<std::pair<int, int>>;
    auto make = [](int n, const E& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
        return g;
    };
    if (name == "G0") return make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
    if (name == "G1") return make(6, {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {5, 6}});
    if (name == "G2") {
        return make(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {5, 6}});
    }
    if (name == "G3") return make(6, {{1, 3}, {3, 4}, {2, 4}, {2, 5}, {2, 6}, {5, 6}});
    if (name == "P4") return path_graph(4);
    throw InvalidInput("unknown named graph '" + std::string(name) + "' (expected G0, G1, G2, G3 or P4)");
}

Graph build(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arity = [&](std::size_t count) {
        require(p.size() == count, spec.name + ": expected " + std::to_string(count) + " parameter(s), got " +
                                       std::to_string(p.size()));
    };
    auto small = [&](std::size_t i) {
        require(p[i] >= -1'000'000 && p[i] <= 1'000'000, spec.name + ": parameter out of range");
        return static_cast<int>(p[i]);
    };
    const std::string& n = spec.name;
    if (n == "Path") return arity(1), path_graph(small(0));
    if (n == "Cycle") return arity(1), cycle_graph(small(0));
    if (n == "Complete") return arity(1), complete_graph(small(0));
    if (n == "Star") return arity(1), star_graph(small(0));
    if (n == "WhiskeredComplete") return arity(1), whiskered_complete(small(0));
    if (n == "Gab") return arity(2), gab_graph(small(0), small(1));
    if (n == "Gabmn") return arity(4), gabmn_graph(small(0), small(1), small(2), small(3));
    if (n == "Hk") return arity(1), hk_graph(small(0));
    if (n == "HkPrime") return arity(1), hk_prime_graph(small(0));
    if (n == "Named") return arity(0), named_graph(spec.label);
    if (n == "CameronWalker") {
        arity(2);
        return random_cameron_walker(static_cast<std::uint64_t>(p[0]), small(1));
    }
    if (n == "DimVdRandom") {
        arity(2);
        return random_dimvd_graph(static_cast<std::uint64_t>(p[0]), small(1)).graph;
    }
    throw InvalidInput("unknown family '" + n + "'");
}

FamilySpec parse_family(const std::vector<std::string>& words) {
    require(!words.empty(), "family: missing family name");
    FamilySpec spec;
    spec.name = words[0];
    if (spec.name == "Named") {
        require(words.size() == 2, "Named: expected one label");
        spec.label = words[1];
        return spec;
    }
    for (std::size_t i = 1; i < words.size(); ++i) {
        try {
            std::size_t used = 0;
            spec.params.push_back(std::stoll(words[i], &used));
            require(used == words[i].size(), "");
        } catch (const std::exception&) {
            throw InvalidInput("family: parameter '" + words[i] + "' is not an integer");
        }
    }
    return spec;
}

Edge hk_prime_edge(int k, char family, int i) {
    require(k >= 2 && i >= 1 && i <= k, "hk_prime_edge: index out of range");
    const int x = 1 + i, y = 1 + k + i, z = 1 + 2 * k + i;
    switch (family) {
    case 'e': return {0, x};
    case 'f': return {1, y};
    case 'g': return {x, z};
    case 'h': return {y, z};
    default: throw InvalidInput(std::string("hk_prime_edge: unknown edge family '") + family + "'");
    }
}

std::vector<Edge> hk_prime_order(int k) {
    std::vector<Edge> order;
    for (int i = 2; i <= k - 1; ++i) {
        for (char f : {'g', 'h', 'f', 'e'}) order.push_back(hk_prime_edge(k, f, i));
    }
    const std::pair<char, int> tail[] = {{'e', 1}, {'h', 1}, {'f', k}, {'g', k},
                                         {'e', k}, {'g', 1}, {'f', 1}, {'h', k}};
    for (auto [f, i] : tail) order.push_back(hk_prime_edge(k, f, i));
    return order;
}

std::vector<ChainTerm> hk_prime_xi(int k) {
    const std::vector<Edge> order = hk_prime_order(k);
    auto pos = [&](char f, int i) {
        const Edge e = hk_prime_edge(k, f, i);
        return static_cast<int>(std::find(order.begin(), order.end(), e) - order.begin());
    };
    std::uint64_t prefix = 0;
    for (int i = 2; i <= k - 1; ++i) prefix |= (std::uint64_t{1} << pos('g', i)) | (std::uint64_t{1} << pos('h', i));
    for (auto [f, i] : {std::pair{'e', 1}, std::pair{'h', 1}, std::pair{'f', k}, std::pair{'g', k}}) {
        prefix |= std::uint64_t{1} << pos(f, i);
    }
    return {{prefix | (std::uint64_t{1} << pos('e', k)), 1}, {prefix | (std::uint64_t{1} << pos('g', 1)), -1}};
}

GabmnParams solve_gabmn_params(int p, int q, int r) {
    require(0 < p && p <= q && q <= r && r <= 2 * q, "solve_gabmn_params: need 0 < p <= q <= r <= 2q");
    if (r - q <= q - p + 1) return {0, p - 1, r - q, q - p + 1};
    return {r - 2 * q + p - 1, 2 * q - r, q - p + 1, q - p + 1};
}

namespace {

constexpr int kMaxRetries = 10'000;

Graph shuffled(const Graph& g, std::mt19937_64& rng, std::vector<int>& perm) {
    perm.resize(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

DimInstance relabelled_instance(const Graph& g, const std::vector<Edge>& pairs, std::mt19937_64& rng) {
    std::vector<int> perm;
    Graph h = shuffled(g, rng, perm);
    std::vector<Edge> dim;
    for (const Edge& e : pairs) dim.emplace_back(perm[e.u], perm[e.v]);
    DimDecomposition d = dim_decomposition(h, dim);
    return {std::move(h), std::move(d)};
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

} // namespace

Graph random_graph(std::uint64_t seed, int n_max) {
    require(n_max >= 1 && n_max <= Graph::kMaxVertices, "random_graph: n_max outside [1, 64]");
    std::mt19937_64 rng(seed);
    const int n = uniform(rng, 1, n_max);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

DimInstance random_dim_graph(std::uint64_t seed, int n_max) {
    require(n_max >= 2 && n_max <= Graph::kMaxVertices, "random_dim_graph: n_max outside [2, 64]");
    std::mt19937_64 rng(seed);
    const int n = uniform(rng, 2, n_max);
    const int m = uniform(rng, 1, n / 2);
    // Pairs on 0..2m-1, W on 2m..n-1.
    Graph g(n);
    std::vector<Edge> pairs;
    for (int j = 0; j < m; ++j) {
        g.add_edge(2 * j, 2 * j + 1);
        pairs.emplace_back(2 * j, 2 * j + 1);
    }
    const double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
    for (int y = 2 * m; y < n; ++y) {
        for (int x = 0; x < 2 * m; ++x) {
            if (coin(rng, density)) g.add_edge(x, y);
        }
        if (g.degree(y) == 0) g.add_edge(uniform(rng, 0, 2 * m - 1), y);
    }
    return relabelled_instance(g, pairs, rng);
}

namespace {

// Grows an in-class graph gadget by gadget. Vertex roles:
//   free_w: W vertices that may still receive edges;
//   flexible: non-leaf ends of type (i) pairs, whose degree is unconstrained.
struct DimVdBuilder {
    std::mt19937_64& rng;
    int budget;
    std::vector<Edge> edges;
    std::vector<Edge> pairs;
    std::vector<int> free_w;
    std::vector<int> flexible;
    std::vector<int> triangle_apexes;
    int next = 0;

    int fresh() { return next++; }
    int pick(const std::vector<int>& from) { return from[uniform(rng, 0, static_cast<int>(from.size()) - 1)]; }
    int remaining() const { return budget - next; }

    void type_i() {
        const int x1 = fresh(), x2 = fresh();
        edges.emplace_back(x1, x2);
        pairs.emplace_back(x1, x2);
        edges.emplace_back(x1, pick(free_w));
        flexible.push_back(x1);
    }
    void type_ii(int y) {
        const int x1 = fresh(), x2 = fresh();
        edges.emplace_back(x1, x2);
        pairs.emplace_back(x1, x2);
        edges.emplace_back(x1, y);
        edges.emplace_back(x2, y);
        triangle_apexes.push_back(y);
    }
    void type_iii() {
        const int x1 = fresh(), x2 = fresh(), private_y = fresh();
        edges.emplace_back(x1, x2);
        pairs.emplace_back(x1, x2);
        edges.emplace_back(x1, private_y);
        edges.emplace_back(x2, private_y);
        edges.emplace_back(coin(rng) ? x1 : x2, pick(free_w));
    }
    bool type_iv() {
        if (free_w.size() < 2) {
            if (flexible.empty() || remaining() < 4) return false;
            new_w();
        }
        const int y1 = pick(free_w);
        int y2 = pick(free_w);
        while (y2 == y1) y2 = pick(free_w);
        const bool has_triangle = std::count(triangle_apexes.begin(), triangle_apexes.end(), y1) > 0 ||
                                  std::count(triangle_apexes.begin(), triangle_apexes.end(), y2) > 0;
        if (!has_triangle && remaining() < 5) return false;
        if (has_triangle && remaining() < 3) return false;
        const int x1 = fresh(), x2 = fresh(), private_y = fresh();
        edges.emplace_back(x1, x2);
        pairs.emplace_back(x1, x2);
        edges.emplace_back(x1, private_y);
        edges.emplace_back(x2, private_y);
        edges.emplace_back(x1, y1);
        edges.emplace_back(x2, y2);
        if (!has_triangle) type_ii(y1);
        return true;
    }
    void new_w() {
        const int y = fresh();
        edges.emplace_back(pick(flexible), y);
        free_w.push_back(y);
    }
};

} // namespace

DimInstance random_dimvd_graph(std::uint64_t seed, int n_max) {
    require(n_max >= 3 && n_max <= Graph::kMaxVertices, "random_dimvd_graph: n_max outside [3, 64]");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        DimVdBuilder b{rng, uniform(rng, 3, n_max), {}, {}, {}, {}, {}, 0};
        b.free_w.push_back(b.fresh());
        while (b.remaining() >= 1) {
            const int kind = uniform(rng, 0, 4);
            if (kind == 4 && !b.flexible.empty()) {
                b.new_w();
            } else if (kind == 0 && b.remaining() >= 2) {
                b.type_i();
            } else if (kind == 1 && b.remaining() >= 2) {
                b.type_ii(b.pick(b.free_w));
            } else if (kind == 2 && b.remaining() >= 3) {
                b.type_iii();
            } else if (kind == 3) {
                b.type_iv();
            } else if (b.remaining() < 2) {
                if (b.flexible.empty()) break;
                b.new_w();
            }
        }
        if (b.pairs.empty()) continue;
        const Graph g = Graph::from_edges(b.next, b.edges);
        DimInstance inst = relabelled_instance(g, b.pairs, rng);
        if (is_connected(inst.graph) && !inst.decomposition.w.empty() &&
            dimvd_class_check(inst.graph, inst.decomposition).in_class) {
            return inst;
        }
    }
    throw InternalError("random_dimvd_graph: no in-class instance after retries");
}

Graph random_cameron_walker(std::uint64_t seed, int n_max) {
    require(n_max >= 5 && n_max <= Graph::kMaxVertices, "random_cameron_walker: n_max outside [5, 64]");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const int n_target = uniform(rng, 5, n_max);
        const int sx = uniform(rng, 1, std::max(1, n_target / 3));
        const int sy = uniform(rng, 1, std::max(1, (n_target - 2 * sx) / 2));
        if (2 * sx + sy > n_target) continue;
        std::vector<Edge> edges;
        // X = 0..sx-1, Y = sx..sx+sy-1; a random spanning tree of K_{sx,sy} keeps the core connected.
        std::vector<int> order(sx + sy);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> placed_x, placed_y;
        auto is_x = [&](int v) { return v < sx; };
        (is_x(order[0]) ? placed_x : placed_y).push_back(order[0]);
        std::vector<int> pending(order.begin() + 1, order.end());
        while (!pending.empty()) {
            bool progress = false;
            for (auto it = pending.begin(); it != pending.end(); ++it) {
                const int v = *it;
                const auto& other = is_x(v) ? placed_y : placed_x;
                if (other.empty()) continue;
                edges.emplace_back(v, other[uniform(rng, 0, static_cast<int>(other.size()) - 1)]);
                (is_x(v) ? placed_x : placed_y).push_back(v);
                pending.erase(it);
                progress = true;
                break;
            }
            if (!progress) break;
        }
        if (!pending.empty()) continue;
        for (int x = 0; x < sx; ++x) {
            for (int y = sx; y < sx + sy; ++y) {
                if (coin(rng, 0.3) && std::find(edges.begin(), edges.end(), Edge(x, y)) == edges.end()) {
                    edges.emplace_back(x, y);
                }
            }
        }
        int next = sx + sy;
        for (int x = 0; x < sx; ++x) edges.emplace_back(x, next++);
        while (next < n_target) {
            if (next + 2 <= n_target && coin(rng)) {
                const int y = uniform(rng, sx, sx + sy - 1);
                edges.emplace_back(y, next);
                edges.emplace_back(y, next + 1);
                edges.emplace_back(next, next + 1);
                next += 2;
            } else {
                edges.emplace_back(uniform(rng, 0, sx - 1), next++);
            }
        }
        std::vector<int> perm;
        Graph g = shuffled(Graph::from_edges(next, edges), rng, perm);
        if (is_cameron_walker(g)) return g;
    }
    throw InternalError("random_cameron_walker: no instance after retries");
}

} // namespace eil
