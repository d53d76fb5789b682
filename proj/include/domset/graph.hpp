#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domset/error.hpp"

namespace domset {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrorKind {
    Malformed,
    EdgeCountMismatch,
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    Disconnected,
};

const char* to_string(GraphErrorKind kind);

class GraphError : public InputError {
public:
    GraphError(GraphErrorKind kind, const std::string& what)
        : InputError(what), kind_(kind) {}
    GraphErrorKind kind() const noexcept { return kind_; }

private:
    GraphErrorKind kind_;
};

/// Immutable connected simple undirected graph in CSR form.
///
/// Vertices are 0-based internally. Neighbor lists are sorted ascending,
/// which every "smallest id wins" tie-break in the library relies on.
class Graph {
public:
    Graph() = default;

    /// Builds and validates a graph. Throws GraphError on loops, parallel
    /// edges, out-of-range ids or a disconnected result.
    static Graph from_edges(Vertex n, std::span<const Edge> edges);

    Vertex num_vertices() const noexcept { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
    std::int64_t num_edges() const noexcept { return static_cast<std::int64_t>(targets_.size() / 2); }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    Vertex degree(Vertex v) const noexcept { return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]); }

    bool has_edge(Vertex u, Vertex v) const;
    bool valid(Vertex v) const noexcept { return v >= 0 && v < num_vertices(); }

    /// All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// FNV-1a over the canonical edge list; identifies an instance in solution files.
    std::uint64_t checksum() const;

private:
    std::vector<std::int64_t> offsets_;
    std::vector<Vertex> targets_;
};

/// Parses the .gr format: optional `c` comment lines, a `p <n> <m>` header
/// (a `p tw <n> <m>` header is accepted too), then m lines `u v` (1-based).
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

std::string write_graph(const Graph& g);

/// True iff G[set] is connected (and set is non-empty).
bool induces_connected(const Graph& g, std::span<const Vertex> set);

} // namespace domset
