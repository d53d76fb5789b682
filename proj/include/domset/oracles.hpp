#pragma once

#include <span>
#include <vector>

#include "domset/graph.hpp"
#include "domset/radius.hpp"
#include "domset/rooted_tree.hpp"
#include "domset/tree_decomposition.hpp"

namespace domset {

/// Size limits for the exhaustive solvers; larger inputs raise BudgetExceeded.
struct OracleBudget {
    int max_vertices = 13;
    int max_bags = 12;
};

/// Minimum (connected) r-dominating set by enumerating subsets in order of
/// size, lexicographically within a size. Returns the first feasible one.
std::vector<Vertex> exact_rdom(const Graph& g, const RadiusFunction& r, bool connected, const OracleBudget& budget = {});

/// Same optimum by branch and bound: branch on the ball of the smallest
/// undominated vertex; connected sets are grown one neighbor at a time.
std::vector<Vertex> exact_rdom_bnb(const Graph& g, const RadiusFunction& r, bool connected,
                                   const OracleBudget& budget = {});

struct ExactCenter {
    std::vector<Vertex> centers;
    int eccentricity = 0;
};

/// Optimal (connected) p-center by enumerating all sets of at most p vertices.
ExactCenter exact_pcenter(const Graph& g, int p, bool connected, const OracleBudget& budget = {});

/// Same optimum as the smallest e whose exact_rdom_bnb with r = e has at most p vertices.
ExactCenter exact_pcenter_bnb(const Graph& g, int p, bool connected, const OracleBudget& budget = {});

/// Minimum connected node set of a tree with d_T(v, set) <= radii[v], grown
/// from every possible top node. Sorted; smallest node sets first on ties.
std::vector<int> exact_min_covering_subtree(const RootedTree& t, std::span<const int> radii,
                                            const OracleBudget& budget = {});

/// Same, by scanning every node subset as a bitmask.
std::vector<int> exact_min_covering_subtree_bitmask(const RootedTree& t, std::span<const int> radii,
                                                    const OracleBudget& budget = {});

/// Minimum connected bag set with d_G(v, bag) <= radii[v] for some bag of the set.
std::vector<int> exact_min_covering_subtree_td(const Graph& g, const TreeDecomposition& td, std::span<const int> radii,
                                               const OracleBudget& budget = {});

/// Same, by scanning every bag subset as a bitmask.
std::vector<int> exact_min_covering_subtree_td_bitmask(const Graph& g, const TreeDecomposition& td,
                                                       std::span<const int> radii, const OracleBudget& budget = {});

} // namespace domset
