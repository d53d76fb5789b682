#pragma once

#include <span>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/rooted_tree.hpp"

namespace domset {

/// BFS layering from a start vertex s, each layer split into clusters: two
/// vertices of layer i share a cluster iff a path joins them without
/// entering any layer < i. Clusters form a rooted tree with {s} as root.
///
/// Cluster ids are ordered by (layer, smallest member), so the root is 0
/// and a parent always has a smaller id than its children.
struct LayeringPartition {
    Vertex start = kNoVertex;
    std::vector<int> layer;                   ///< per vertex, d_G(s, v)
    std::vector<Vertex> bfs_parent;           ///< per vertex, kNoVertex for s
    std::vector<int> cluster_of;              ///< per vertex
    std::vector<std::vector<Vertex>> clusters; ///< members sorted ascending
    std::vector<int> cluster_layer;
    RootedTree tree;

    int num_clusters() const noexcept { return static_cast<int>(clusters.size()); }
    /// Smallest-id member.
    Vertex representative(int cluster) const { return clusters[static_cast<std::size_t>(cluster)].front(); }
};

LayeringPartition build_layering_partition(const Graph& g, Vertex start = 0);

/// Δ: maximum over clusters of the largest pairwise distance inside it.
/// One BFS per vertex of a non-singleton cluster.
int cluster_diameter(const Graph& g, const LayeringPartition& lp);

/// Cheap upper bound on Δ: twice the largest distance from a cluster's
/// representative to another member of its cluster.
int cluster_diameter_upper_bound(const Graph& g, const LayeringPartition& lp);

/// d_T(u, v): hop distance between the clusters of u and v.
int tree_distance(const LayeringPartition& lp, Vertex u, Vertex v);

/// r(C) = min over members of r(v).
std::vector<int> cluster_radii(const LayeringPartition& lp, std::span<const int> vertex_radii);

/// `C <id> <layer> <v1> ...` per cluster and `T <parent> <child>` per tree
/// edge; cluster ids and vertices 1-based.
std::string dump_layering_partition(const LayeringPartition& lp);

} // namespace domset
