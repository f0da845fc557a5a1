#include "eil/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "eil/errors.hpp"

namespace eil {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    return s;
}

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw InvalidInput(std::string("graph6: byte '") + c + "' outside 63..126");
    return v;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (text.empty()) throw InvalidInput("graph6: empty input");
    if (text.front() == ':' || text.front() == '&') throw InvalidInput("graph6: sparse6/digraph6 not supported");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = sextet(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') throw InvalidInput("graph6: more than 64 vertices");
        if (text.size() < 4) throw InvalidInput("graph6: truncated size field");
        n = (static_cast<long>(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
        if (n < 63) throw InvalidInput("graph6: non-canonical size field");
        pos = 4;
    }
    if (n > Graph::kMaxVertices) throw InvalidInput("graph6: " + std::to_string(n) + " vertices exceeds 64");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw InvalidInput("graph6: expected " + std::to_string(bytes) + " body bytes, got " +
                           std::to_string(text.size() - pos));
    }
    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < bytes * 6; ++k) {
        if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) throw InvalidInput("graph6: nonzero padding bits");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("edge json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw InvalidInput("edge json: missing integer field \"n\"");
    }
    const long n = doc["n"].get<long>();
    if (n < 0 || n > Graph::kMaxVertices) throw InvalidInput("edge json: n outside [0, 64]");
    Graph g(static_cast<int>(n));
    const auto& edges = doc.value("edges", nlohmann::json::array());
    if (!edges.is_array()) throw InvalidInput("edge json: \"edges\" must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InvalidInput("edge json: each edge must be a pair of integers");
        }
        const long u = e[0].get<long>();
        const long v = e[1].get<long>();
        if (u < 1 || v < 1 || u > n || v > n) {
            throw InvalidInput("edge json: vertex index out of range 1.." + std::to_string(n));
        }
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return g;
}

std::string write_edge_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
    return nlohmann::json{{"n", g.order()}, {"edges", edges}}.dump();
}

std::string write_dot(const Graph& g, const std::optional<DotHighlight>& highlight) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v + 1;
        if (highlight && highlight->vertices.contains(v)) os << " [color=red, style=bold]";
        os << ";\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  " << e.u + 1 << " -- " << e.v + 1;
        if (highlight && std::find(highlight->edges.begin(), highlight->edges.end(), e) != highlight->edges.end()) {
            os << " [color=red, penwidth=2]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace eil
