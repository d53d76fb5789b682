#include "domset/layering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "domset/bfs.hpp"
#include "domset/union_find.hpp"

namespace domset {

LayeringPartition build_layering_partition(const Graph& g, Vertex start) {
    if (!g.valid(start)) throw InputError("layering partition: start vertex out of range");
    const Vertex n = g.num_vertices();
    auto dm = bfs(g, start);

    LayeringPartition lp;
    lp.start = start;
    lp.layer = dm.dist;
    lp.bfs_parent = dm.parent;

    const int depth = lp.layer[dm.order.back()];
    std::vector<std::vector<Vertex>> by_layer(static_cast<std::size_t>(depth) + 1);
    for (Vertex v : dm.order) by_layer[lp.layer[v]].push_back(v);

    // Deepest layer first: after adding layer i (its intra-layer edges and
    // its edges down to layer i+1) the union-find components are exactly
    // the components of G[L_i ∪ L_{i+1} ∪ ...].
    UnionFind uf(n);
    std::vector<Vertex> cluster_root(static_cast<std::size_t>(n), kNoVertex);
    for (int i = depth; i >= 0; --i) {
        for (Vertex v : by_layer[i]) {
            for (Vertex w : g.neighbors(v)) {
                if (lp.layer[w] >= i) uf.unite(v, w);
            }
        }
        for (Vertex v : by_layer[i]) cluster_root[v] = uf.find(v);
    }

    // Group each layer by its component root, then number clusters by
    // (layer, smallest member).
    std::vector<std::vector<Vertex>> clusters;
    std::vector<int> layers;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int i = 0; i <= depth; ++i) {
        auto members = by_layer[i];
        std::sort(members.begin(), members.end());
        std::size_t first = clusters.size();
        for (Vertex v : members) {
            Vertex root = cluster_root[v];
            if (slot[root] < 0 || static_cast<std::size_t>(slot[root]) < first) {
                slot[root] = static_cast<int>(clusters.size());
                clusters.emplace_back();
                layers.push_back(i);
            }
            clusters[slot[root]].push_back(v);
        }
    }
    lp.clusters = std::move(clusters);
    lp.cluster_layer = std::move(layers);
    lp.cluster_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < lp.clusters.size(); ++c) {
        for (Vertex v : lp.clusters[c]) lp.cluster_of[v] = static_cast<int>(c);
    }

    std::vector<int> parent(lp.clusters.size(), -1);
    for (std::size_t c = 1; c < lp.clusters.size(); ++c) {
        parent[c] = lp.cluster_of[lp.bfs_parent[lp.clusters[c].front()]];
    }
    lp.tree = RootedTree::from_parents(std::move(parent));
    return lp;
}

int cluster_diameter(const Graph& g, const LayeringPartition& lp) {
    int delta = 0;
    BfsScratch scratch(g.num_vertices());
    for (const auto& cluster : lp.clusters) {
        if (cluster.size() < 2) continue;
        const int c = lp.cluster_of[cluster.front()];
        for (std::size_t i = 0; i + 1 < cluster.size(); ++i) {
            // Only pairs (x, y) with y after x are needed; stop once all are reached.
            std::size_t remaining = cluster.size() - 1;
            Vertex x = cluster[i];
            scratch.run(g, std::span<const Vertex>(&x, 1), std::numeric_limits<int>::max(), [&](Vertex v, int d) {
                if (v != x && lp.cluster_of[v] == c) {
                    delta = std::max(delta, d);
                    if (--remaining == 0) return false;
                }
                return true;
            });
        }
    }
    return delta;
}

int cluster_diameter_upper_bound(const Graph& g, const LayeringPartition& lp) {
    int radius = 0;
    BfsScratch scratch(g.num_vertices());
    for (const auto& cluster : lp.clusters) {
        if (cluster.size() < 2) continue;
        const int c = lp.cluster_of[cluster.front()];
        std::size_t remaining = cluster.size() - 1;
        Vertex x = cluster.front();
        scratch.run(g, std::span<const Vertex>(&x, 1), std::numeric_limits<int>::max(), [&](Vertex v, int d) {
            if (v != x && lp.cluster_of[v] == c) {
                radius = std::max(radius, d);
                if (--remaining == 0) return false;
            }
            return true;
        });
    }
    return 2 * radius;
}

int tree_distance(const LayeringPartition& lp, Vertex u, Vertex v) {
    return lp.tree.distance(lp.cluster_of[u], lp.cluster_of[v]);
}

std::vector<int> cluster_radii(const LayeringPartition& lp, std::span<const int> vertex_radii) {
    std::vector<int> out(lp.clusters.size(), std::numeric_limits<int>::max());
    for (std::size_t v = 0; v < vertex_radii.size(); ++v) {
        int& r = out[lp.cluster_of[v]];
        r = std::min(r, vertex_radii[v]);
    }
    return out;
}

std::string dump_layering_partition(const LayeringPartition& lp) {
    std::ostringstream out;
    for (int c = 0; c < lp.num_clusters(); ++c) {
        out << "C " << (c + 1) << ' ' << lp.cluster_layer[c];
        for (Vertex v : lp.clusters[c]) out << ' ' << (v + 1);
        out << '\n';
    }
    for (int c : lp.tree.bfs_order()) {
        for (int child : lp.tree.children(c)) out << "T " << (c + 1) << ' ' << (child + 1) << '\n';
    }
    return out.str();
}

} // namespace domset
