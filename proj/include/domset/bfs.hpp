#pragma once

#include <optional>
#include <span>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

inline constexpr int kUnreached = -1;

/// Result of a (multi-source, optionally depth-limited) BFS.
///
/// For every reached non-source v: dist[parent[v]] == dist[v] - 1 and
/// source[parent[v]] == source[v]. source[v] is the smallest source id among
/// all sources at distance dist[v]; parent[v] is the smallest-id predecessor
/// consistent with that source.
struct DistanceMap {
    std::vector<int> dist;
    std::vector<Vertex> parent;
    std::vector<Vertex> source;
    std::vector<Vertex> order; ///< reached vertices in non-decreasing distance

    bool reached(Vertex v) const noexcept { return dist[static_cast<std::size_t>(v)] != kUnreached; }

    /// v, parent(v), ..., source(v).
    std::vector<Vertex> path_to_source(Vertex v) const;
};

DistanceMap bfs(const Graph& g, std::span<const Vertex> sources, std::optional<int> depth_limit = {});
DistanceMap bfs(const Graph& g, Vertex source, std::optional<int> depth_limit = {});

/// d_G(v, set) for all v.
std::vector<int> distances_to_set(const Graph& g, std::span<const Vertex> set);

/// ecc_G(set) = max_v d_G(v, set).
int eccentricity(const Graph& g, std::span<const Vertex> set);

/// Reusable scratch space for many depth-limited BFS runs on one graph.
/// Each run only touches the vertices it reaches.
class BfsScratch {
public:
    explicit BfsScratch(Vertex n) : dist_(static_cast<std::size_t>(n), kUnreached) {}

    /// Calls visit(v, d) for every v with d = d_G(v, sources) <= depth_limit,
    /// in BFS order. Returning false from visit stops the search early.
    template <class Visit>
    void run(const Graph& g, std::span<const Vertex> sources, int depth_limit, Visit&& visit) {
        reset();
        for (Vertex s : sources) {
            if (dist_[s] != kUnreached) continue;
            dist_[s] = 0;
            queue_.push_back(s);
        }
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            Vertex u = queue_[head];
            int du = dist_[u];
            if (!visit(u, du)) return;
            if (du == depth_limit) continue;
            for (Vertex w : g.neighbors(u)) {
                if (dist_[w] == kUnreached) {
                    dist_[w] = du + 1;
                    queue_.push_back(w);
                }
            }
        }
    }

    int dist(Vertex v) const noexcept { return dist_[static_cast<std::size_t>(v)]; }

private:
    void reset() {
        for (Vertex v : queue_) dist_[v] = kUnreached;
        queue_.clear();
    }

    std::vector<int> dist_;
    std::vector<Vertex> queue_;
};

/// All-pairs distances by n BFS runs; row-major n*n. Small graphs only.
std::vector<int> all_pairs_distances(const Graph& g);

} // namespace domset
