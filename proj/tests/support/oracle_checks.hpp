#pragma once

// Brute-force helpers for tests. Nothing here calls the solvers; distances
// come from Floyd-Warshall and clusters from the textbook definition.

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "domset/generators.hpp"
#include "domset/graph.hpp"
#include "domset/radius.hpp"
#include "domset/rooted_tree.hpp"
#include "domset/tree_decomposition.hpp"

namespace domset::testing {

inline constexpr int kFar = 1 << 28;

/// 1-based edge list, as in the .gr files.
Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Vertex 0 is the center.
Graph star_graph(int leaves);

using Matrix = std::vector<std::vector<int>>;
Matrix floyd(const Graph& g);

/// Partition of V: u ~ v iff same layer i and joined by a path using only
/// vertices of layer >= i. Clusters sorted, listed by (layer, min vertex).
std::vector<std::vector<Vertex>> definitional_clusters(const Graph& g, Vertex start);

int brute_cluster_diameter(const Matrix& d, const std::vector<std::vector<Vertex>>& clusters);

/// max over v of d(v, set) - r(v).
int max_excess(const Matrix& d, const RadiusFunction& r, const std::vector<Vertex>& set);
int set_eccentricity(const Matrix& d, const std::vector<Vertex>& set);
bool dfs_connected(const Graph& g, const std::vector<Vertex>& set);

/// Minimum size of a node set dominating the tree within the radii.
int brute_tree_domset_size(const RootedTree& t, const std::vector<int>& radii);
/// Minimum connected covering node set; lexicographically smallest among ties.
std::vector<int> brute_tree_min_subtree(const RootedTree& t, const std::vector<int>& radii);
bool tree_covers(const RootedTree& t, const std::vector<int>& radii, const std::vector<int>& nodes);

/// Minimum (connected) r-dominating set size by plain mask enumeration.
int brute_rdom_size(const Graph& g, const RadiusFunction& r, bool connected);
/// Optimal (connected) p-center eccentricity by plain mask enumeration.
int brute_pcenter_ecc(const Graph& g, int p, bool connected);

/// Valid decomposition from a random elimination order (for G(n,p) tests).
TreeDecomposition elimination_td(const Graph& g, Rng& rng);

std::vector<int> vector_of(const RadiusFunction& r);

} // namespace domset::testing
