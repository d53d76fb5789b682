#pragma once

#include <span>
#include <vector>

#include "domset/rooted_tree.hpp"

namespace domset {

// Exact algorithms on node trees with per-node demand radii in the tree
// metric. A node set X covers node v when d_T(v, X) <= r(v).

/// Minimum-cardinality set of nodes covering every node. Sorted ascending.
std::vector<int> tree_r_dominating_set(const RootedTree& t, std::span<const int> radii);

/// Minimum connected covering node set. A result of two or more nodes is
/// unique; a single-node result is the smallest id that covers everything.
Subtree tree_min_covering_subtree(const RootedTree& t, std::span<const int> radii);

/// Smallest covering subtree that contains `anchor`. Exposed for tests of
/// the two-pass construction.
Subtree tree_covering_subtree_containing(const RootedTree& t, std::span<const int> radii, int anchor);

/// max over v of (d_T(x, v) - r(v)) for every node x; x covers the whole
/// tree alone iff the value is <= 0.
std::vector<int> tree_excess(const RootedTree& t, std::span<const int> radii);

struct TreeCenter {
    std::vector<int> nodes;
    int eccentricity = 0;
};

struct TreeConnectedCenter {
    Subtree subtree;
    int eccentricity = 0;
};

/// Optimal p-center of the tree (at most p nodes).
TreeCenter tree_p_center(const RootedTree& t, int p);

/// Optimal connected p-center: a subtree of at most p nodes of minimum eccentricity.
TreeConnectedCenter tree_connected_p_center(const RootedTree& t, int p);

/// max over nodes of d_T(v, nodes).
int tree_eccentricity(const RootedTree& t, std::span<const int> nodes);

} // namespace domset
