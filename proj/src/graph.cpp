#include "domset/graph.hpp"

#include <algorithm>
#include <sstream>

#include "text_util.hpp"

namespace domset {

const char* to_string(GraphErrorKind kind) {
    switch (kind) {
    case GraphErrorKind::Malformed: return "Malformed";
    case GraphErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
    case GraphErrorKind::DuplicateEdge: return "DuplicateEdge";
    case GraphErrorKind::SelfLoop: return "SelfLoop";
    case GraphErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case GraphErrorKind::Disconnected: return "Disconnected";
    }
    return "Unknown";
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
    if (n <= 0) throw GraphError(GraphErrorKind::Malformed, "graph must have at least one vertex");

    std::vector<std::int64_t> degree(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw GraphError(GraphErrorKind::VertexOutOfRange, "edge " + std::to_string(u + 1) + " " +
                                                                   std::to_string(v + 1) + " out of range");
        }
        if (u == v) throw GraphError(GraphErrorKind::SelfLoop, "loop at vertex " + std::to_string(u + 1));
        ++degree[u + 1];
        ++degree[v + 1];
    }

    Graph g;
    g.offsets_.assign(degree.size(), 0);
    for (std::size_t i = 1; i < degree.size(); ++i) g.offsets_[i] = g.offsets_[i - 1] + degree[i];
    g.targets_.resize(static_cast<std::size_t>(g.offsets_.back()));
    std::vector<std::int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto first = g.targets_.begin() + g.offsets_[v];
        auto last = g.targets_.begin() + g.offsets_[v + 1];
        std::sort(first, last);
        auto dup = std::adjacent_find(first, last);
        if (dup != last) {
            throw GraphError(GraphErrorKind::DuplicateEdge, "duplicate edge " + std::to_string(v + 1) + " " +
                                                                std::to_string(*dup + 1));
        }
    }

    // Connectivity: iterative DFS from vertex 0.
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    Vertex count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != n) {
        throw GraphError(GraphErrorKind::Disconnected,
                         "graph is disconnected (" + std::to_string(count) + " of " + std::to_string(n) +
                             " vertices reachable from vertex 1)");
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(num_edges()));
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::uint64_t Graph::checksum() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(num_vertices()));
    mix(static_cast<std::uint64_t>(num_edges()));
    for (const auto& [u, v] : edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

Graph parse_graph(std::string_view text) {
    auto header_int = [](std::string_view token, std::size_t line, std::string_view what) {
        std::int64_t value = 0;
        if (!detail::try_parse_int(token, value)) {
            throw GraphError(GraphErrorKind::Malformed, detail::bad_int_message(token, line, what));
        }
        return value;
    };
    auto lines = detail::tokenize_lines(text);
    std::int64_t n = -1;
    std::int64_t m = -1;
    std::vector<Edge> edges;
    for (const auto& line : lines) {
        const auto& tok = line.tokens;
        auto where = "line " + std::to_string(line.number) + ": ";
        if (tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) throw GraphError(GraphErrorKind::Malformed, where + "second header line");
            std::size_t k = 1;
            std::int64_t probe = 0;
            if (tok.size() == 4 && !detail::try_parse_int(tok[1], probe)) k = 2; // "p tw n m"
            if (tok.size() != k + 2) throw GraphError(GraphErrorKind::Malformed, where + "header must be 'p <n> <m>'");
            n = header_int(tok[k], line.number, "vertex count");
            m = header_int(tok[k + 1], line.number, "edge count");
            if (n <= 0 || m < 0 || n > (1ll << 30)) throw GraphError(GraphErrorKind::Malformed, where + "bad header values");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (n < 0) throw GraphError(GraphErrorKind::Malformed, where + "edge before header");
        if (tok.size() != 2) throw GraphError(GraphErrorKind::Malformed, where + "edge line must be 'u v'");
        std::int64_t u = 0;
        std::int64_t v = 0;
        if (!detail::try_parse_int(tok[0], u) || !detail::try_parse_int(tok[1], v)) {
            throw GraphError(GraphErrorKind::Malformed, where + "non-integer vertex id");
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw GraphError(GraphErrorKind::VertexOutOfRange, where + "vertex id out of range 1.." + std::to_string(n));
        }
        edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    }
    if (n < 0) throw GraphError(GraphErrorKind::Malformed, "missing 'p' header");
    if (static_cast<std::int64_t>(edges.size()) != m) {
        // Duplicates are the more specific diagnosis when the counts disagree because of them.
        if (static_cast<std::int64_t>(edges.size()) > m) {
            Graph::from_edges(static_cast<Vertex>(n), edges);
        }
        throw GraphError(GraphErrorKind::EdgeCountMismatch,
                         "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph read_graph_file(const std::string& path) { return parse_graph(detail::read_file(path)); }

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

bool induces_connected(const Graph& g, std::span<const Vertex> set) {
    if (set.empty()) return false;
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : set) in[v] = 1;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Vertex> stack{set.front()};
    seen[set.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    std::size_t distinct = 0;
    for (char c : in) distinct += c;
    return count == distinct;
}

} // namespace domset
