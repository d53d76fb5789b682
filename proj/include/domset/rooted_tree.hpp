#pragma once

#include <span>
#include <utility>
#include <vector>

#include "domset/error.hpp"

namespace domset {

/// A rooted tree over nodes 0..size()-1. Children lists are sorted.
class RootedTree {
public:
    RootedTree() = default;

    /// parent[root] == -1 for exactly one node; throws InputError otherwise
    /// or when the parent relation has a cycle.
    static RootedTree from_parents(std::vector<int> parent);
    static RootedTree from_edges(int n, std::span<const std::pair<int, int>> edges, int root);

    int size() const noexcept { return static_cast<int>(parent_.size()); }
    int root() const noexcept { return root_; }
    int parent(int v) const noexcept { return parent_[static_cast<std::size_t>(v)]; }
    int depth(int v) const noexcept { return depth_[static_cast<std::size_t>(v)]; }
    std::span<const int> children(int v) const noexcept { return children_[static_cast<std::size_t>(v)]; }
    int degree(int v) const noexcept { return static_cast<int>(children(v).size()) + (parent(v) >= 0 ? 1 : 0); }

    /// Root first, then by depth; within a depth, parents' order then child id.
    std::span<const int> bfs_order() const noexcept { return order_; }

    int distance(int u, int v) const;
    std::vector<int> distances_from(int v) const;
    int diameter() const;

    /// Tree induced by a connected node subset, rooted at its node closest to
    /// this tree's root. New ids follow ascending host id; host_ids[i] is the
    /// host node of new node i.
    RootedTree induced(std::span<const int> nodes, std::vector<int>& host_ids) const;

private:
    void finalize();

    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<int> order_;
    std::vector<std::vector<int>> children_;
    int root_ = -1;
};

/// A connected node subset of a RootedTree.
struct Subtree {
    std::vector<int> nodes; ///< sorted ascending
    int root = -1;          ///< node closest to the host root
    int leaf_count = 0;     ///< Λ; 0 for a single node

    std::size_t size() const noexcept { return nodes.size(); }
    bool contains(int node) const;
};

/// Validates that nodes induce a connected subtree of host and fills root and Λ.
Subtree make_subtree(const RootedTree& host, std::vector<int> nodes);

} // namespace domset
