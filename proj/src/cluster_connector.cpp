#include "domset/cluster_connector.hpp"

#include <algorithm>
#include <string>

#include "domset/bfs.hpp"
#include "domset/counting_sort.hpp"
#include "domset/union_find.hpp"

namespace domset {

PathSystem build_leaf_paths(const Graph& g, const LayeringPartition& lp, const Subtree& t_delta) {
    if (lp.layer.size() != static_cast<std::size_t>(g.num_vertices())) {
        throw InputError("layering partition does not belong to this graph");
    }
    // Re-derive root and shape; rejects anything that is not a subtree.
    Subtree checked = make_subtree(lp.tree, t_delta.nodes);
    const auto k = static_cast<std::size_t>(lp.num_clusters());

    std::vector<char> in_subtree(k, 0);
    for (int c : checked.nodes) in_subtree[c] = 1;
    std::vector<char> has_child(k, 0);
    for (int c : checked.nodes) {
        if (c != checked.root) has_child[lp.tree.parent(c)] = 1;
    }

    PathSystem ps;
    if (checked.size() == 1) {
        ps.paths.push_back({lp.representative(checked.root)});
        ps.start_cluster.push_back(checked.root);
        ps.end_cluster.push_back(checked.root);
        return ps;
    }

    std::vector<char> hit(k, 0);
    for (int leaf : checked.nodes) {
        if (leaf == checked.root || has_child[leaf]) continue;
        Vertex v = lp.representative(leaf);
        std::vector<Vertex> path{v};
        hit[leaf] = 1;
        int c = leaf;
        while (c != checked.root && !hit[lp.tree.parent(c)]) {
            v = lp.bfs_parent[v];
            c = lp.cluster_of[v];
            hit[c] = 1;
            path.push_back(v);
        }
        ps.paths.push_back(std::move(path));
        ps.start_cluster.push_back(leaf);
        ps.end_cluster.push_back(c);
    }
    return ps;
}

void check_path_system(const LayeringPartition& lp, const Subtree& t_delta, const PathSystem& ps) {
    std::vector<int> hits(static_cast<std::size_t>(lp.num_clusters()), 0);
    std::vector<char> in_subtree(hits.size(), 0);
    for (int c : t_delta.nodes) in_subtree[c] = 1;
    for (const auto& path : ps.paths) {
        for (std::size_t i = 0; i < path.size(); ++i) {
            int c = lp.cluster_of[path[i]];
            ensure(in_subtree[c] != 0, "leaf path leaves the subtree at cluster " + std::to_string(c));
            ++hits[c];
            if (i > 0) ensure(lp.bfs_parent[path[i - 1]] == path[i], "leaf path is not a bfs-parent chain");
        }
    }
    for (int c : t_delta.nodes) {
        ensure(hits[c] == 1, "cluster " + std::to_string(c) + " is hit by " + std::to_string(hits[c]) +
                                 " path vertices, expected exactly one");
    }
}

ConnectorResult connect_cluster_tree(const Graph& g, const LayeringPartition& lp, const Subtree& t_delta) {
    ConnectorResult out;
    out.paths = build_leaf_paths(g, lp, t_delta);
    check_path_system(lp, t_delta, out.paths);

    const Vertex n = g.num_vertices();
    const auto& paths = out.paths.paths;
    std::vector<int> path_of(static_cast<std::size_t>(n), -1);
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> sources;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (Vertex v : paths[i]) {
            path_of[v] = static_cast<int>(i);
            in_set[v] = 1;
            sources.push_back(v);
        }
    }
    std::vector<Vertex> members = sources;

    if (paths.size() > 1) {
        // Every vertex joins the territory of its nearest path; P(v) and d(v)
        // stay fixed from here on.
        auto dm = bfs(g, sources);
        std::vector<int> part(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) part[v] = path_of[dm.source[v]];

        std::vector<Edge> crossing;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex w : g.neighbors(u)) {
                if (u < w && part[u] != part[w]) crossing.emplace_back(u, w);
            }
        }
        auto key = [&](const Edge& e) { return dm.dist[e.first] + dm.dist[e.second]; };
        auto sorted = counting_sort<Edge>(crossing, key, 2 * std::max<Vertex>(n - 1, 0));

        UnionFind uf(static_cast<int>(paths.size()));
        auto extend = [&](Vertex x) {
            for (; !in_set[x]; x = dm.parent[x]) {
                in_set[x] = 1;
                members.push_back(x);
            }
        };
        for (const Edge& e : sorted) {
            if (uf.components() == 1) break;
            auto [u, w] = e;
            if (!uf.unite(part[u], part[w])) continue;
            extend(u);
            extend(w);
            out.join_costs.push_back(key(e));
        }
        ensure(uf.components() == 1, "cluster connector left the leaf paths disconnected");
    }

    std::sort(members.begin(), members.end());
    out.vertices = std::move(members);
    return out;
}

} // namespace domset
