#pragma once

#include <vector>

#include "domset/graph.hpp"
#include "domset/layering.hpp"
#include "domset/rooted_tree.hpp"

namespace domset {

/// Vertex-disjoint upward paths, one per leaf of a cluster subtree.
///
/// paths[i] starts at the smallest vertex of leaf cluster start_cluster[i]
/// and climbs bfs_parent pointers up to end_cluster[i], the highest ancestor
/// not already hit by an earlier path. Together they hit every cluster of
/// the subtree exactly once.
struct PathSystem {
    std::vector<std::vector<Vertex>> paths;
    std::vector<int> start_cluster;
    std::vector<int> end_cluster;
};

/// Throws InputError when t_delta is not a connected subtree of lp.tree.
PathSystem build_leaf_paths(const Graph& g, const LayeringPartition& lp, const Subtree& t_delta);

/// Checks that every cluster of t_delta meets exactly one path in exactly
/// one vertex and that no path leaves t_delta. Throws InvariantViolation.
void check_path_system(const LayeringPartition& lp, const Subtree& t_delta, const PathSystem& ps);

struct ConnectorResult {
    std::vector<Vertex> vertices; ///< S_δ, sorted
    PathSystem paths;
    /// d(u) + d(v) for each edge uv that merged two parts, in join order.
    std::vector<int> join_costs;
};

/// Connected vertex set meeting every cluster of t_delta: the leaf paths are
/// joined Kruskal-style along edges between BFS territories, cheapest
/// d(u) + d(v) first.
ConnectorResult connect_cluster_tree(const Graph& g, const LayeringPartition& lp, const Subtree& t_delta);

} // namespace domset
