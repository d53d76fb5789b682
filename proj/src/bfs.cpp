#include "domset/bfs.hpp"

#include <algorithm>
#include <limits>

namespace domset {

std::vector<Vertex> DistanceMap::path_to_source(Vertex v) const {
    std::vector<Vertex> path;
    if (!reached(v)) return path;
    for (Vertex x = v; x != kNoVertex; x = parent[x]) path.push_back(x);
    return path;
}

DistanceMap bfs(const Graph& g, std::span<const Vertex> sources, std::optional<int> depth_limit) {
    if (sources.empty()) throw InputError("bfs: empty source set");
    if (depth_limit && *depth_limit < 0) throw InputError("bfs: negative depth limit");
    const auto n = static_cast<std::size_t>(g.num_vertices());
    const int limit = depth_limit.value_or(std::numeric_limits<int>::max());

    DistanceMap out;
    out.dist.assign(n, kUnreached);
    out.parent.assign(n, kNoVertex);
    out.source.assign(n, kNoVertex);
    out.order.reserve(n);
    for (Vertex s : sources) {
        if (!g.valid(s)) throw InputError("bfs: source out of range");
        if (out.dist[s] != kUnreached) continue;
        out.dist[s] = 0;
        out.source[s] = s;
        out.order.push_back(s);
    }
    for (std::size_t head = 0; head < out.order.size(); ++head) {
        Vertex u = out.order[head];
        if (out.dist[u] == limit) continue;
        for (Vertex w : g.neighbors(u)) {
            if (out.dist[w] == kUnreached) {
                out.dist[w] = out.dist[u] + 1;
                out.order.push_back(w);
            }
        }
    }
    // Tie-break pass: predecessors are final because order is by distance.
    for (Vertex v : out.order) {
        if (out.dist[v] == 0) continue;
        Vertex best_parent = kNoVertex;
        Vertex best_source = kNoVertex;
        for (Vertex u : g.neighbors(v)) {
            if (out.dist[u] != out.dist[v] - 1) continue;
            if (best_parent == kNoVertex || out.source[u] < best_source) {
                best_parent = u;
                best_source = out.source[u];
            }
        }
        out.parent[v] = best_parent;
        out.source[v] = best_source;
    }
    return out;
}

DistanceMap bfs(const Graph& g, Vertex source, std::optional<int> depth_limit) {
    return bfs(g, std::span<const Vertex>(&source, 1), depth_limit);
}

std::vector<int> distances_to_set(const Graph& g, std::span<const Vertex> set) {
    BfsScratch scratch(g.num_vertices());
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreached);
    scratch.run(g, set, std::numeric_limits<int>::max(), [&](Vertex v, int d) {
        dist[v] = d;
        return true;
    });
    return dist;
}

int eccentricity(const Graph& g, std::span<const Vertex> set) {
    if (set.empty()) throw InputError("eccentricity of an empty set");
    auto dist = distances_to_set(g, set);
    return *std::max_element(dist.begin(), dist.end());
}

std::vector<int> all_pairs_distances(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<int> out(n * n, kUnreached);
    BfsScratch scratch(g.num_vertices());
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        int* row = out.data() + static_cast<std::size_t>(s) * n;
        scratch.run(g, std::span<const Vertex>(&s, 1), std::numeric_limits<int>::max(), [&](Vertex v, int d) {
            row[v] = d;
            return true;
        });
    }
    return out;
}

} // namespace domset
