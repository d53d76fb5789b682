#include "domset/rooted_tree.hpp"

#include <algorithm>
#include <string>

namespace domset {

RootedTree RootedTree::from_parents(std::vector<int> parent) {
    RootedTree t;
    const int n = static_cast<int>(parent.size());
    if (n == 0) throw InputError("tree must have at least one node");
    t.parent_ = std::move(parent);
    t.children_.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        int p = t.parent_[v];
        if (p == -1) {
            if (t.root_ != -1) throw InputError("tree has more than one root");
            t.root_ = v;
        } else {
            if (p < 0 || p >= n || p == v) throw InputError("bad parent for node " + std::to_string(v));
            t.children_[p].push_back(v);
        }
    }
    if (t.root_ == -1) throw InputError("tree has no root");
    t.finalize();
    if (static_cast<int>(t.order_.size()) != n) throw InputError("parent relation contains a cycle");
    return t;
}

RootedTree RootedTree::from_edges(int n, std::span<const std::pair<int, int>> edges, int root) {
    if (n <= 0 || root < 0 || root >= n) throw InputError("bad tree size or root");
    if (static_cast<int>(edges.size()) != n - 1) throw InputError("a tree on n nodes has n-1 edges");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw InputError("bad tree edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : adj[u]) {
            if (parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (static_cast<int>(queue.size()) != n) throw InputError("tree edges do not form a connected tree");
    return from_parents(std::move(parent));
}

void RootedTree::finalize() {
    const auto n = parent_.size();
    for (auto& c : children_) std::sort(c.begin(), c.end());
    depth_.assign(n, 0);
    order_.clear();
    order_.reserve(n);
    order_.push_back(root_);
    for (std::size_t head = 0; head < order_.size() && order_.size() <= n; ++head) {
        int u = order_[head];
        for (int c : children_[u]) {
            depth_[c] = depth_[u] + 1;
            order_.push_back(c);
        }
    }
}

int RootedTree::distance(int u, int v) const {
    int d = 0;
    while (depth(u) > depth(v)) { u = parent(u); ++d; }
    while (depth(v) > depth(u)) { v = parent(v); ++d; }
    while (u != v) {
        u = parent(u);
        v = parent(v);
        d += 2;
    }
    return d;
}

std::vector<int> RootedTree::distances_from(int v) const {
    std::vector<int> dist(parent_.size(), -1);
    std::vector<int> queue{v};
    dist[v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        auto visit = [&](int w) {
            if (w >= 0 && dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        };
        visit(parent(u));
        for (int c : children(u)) visit(c);
    }
    return dist;
}

int RootedTree::diameter() const {
    auto d0 = distances_from(root_);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = distances_from(far);
    return *std::max_element(d1.begin(), d1.end());
}

RootedTree RootedTree::induced(std::span<const int> nodes, std::vector<int>& host_ids) const {
    host_ids.assign(nodes.begin(), nodes.end());
    std::sort(host_ids.begin(), host_ids.end());
    std::vector<int> local(parent_.size(), -1);
    for (std::size_t i = 0; i < host_ids.size(); ++i) local[host_ids[i]] = static_cast<int>(i);
    std::vector<int> parent(host_ids.size(), -1);
    int roots = 0;
    for (std::size_t i = 0; i < host_ids.size(); ++i) {
        int p = this->parent(host_ids[i]);
        if (p >= 0 && local[p] >= 0) {
            parent[i] = local[p];
        } else {
            ++roots;
        }
    }
    if (roots != 1) throw InputError("node set does not induce a connected subtree");
    return from_parents(std::move(parent));
}

bool Subtree::contains(int node) const { return std::binary_search(nodes.begin(), nodes.end(), node); }

Subtree make_subtree(const RootedTree& host, std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    if (nodes.empty()) throw InputError("subtree must be non-empty");
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) throw InputError("subtree has repeated nodes");
    if (nodes.front() < 0 || nodes.back() >= host.size()) throw InputError("subtree node out of range");
    Subtree s;
    s.nodes = std::move(nodes);
    std::vector<int> degree(s.nodes.size(), 0);
    int roots = 0;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        int p = host.parent(s.nodes[i]);
        auto it = p >= 0 ? std::lower_bound(s.nodes.begin(), s.nodes.end(), p) : s.nodes.end();
        if (it != s.nodes.end() && *it == p) {
            ++degree[i];
            ++degree[static_cast<std::size_t>(it - s.nodes.begin())];
        } else {
            ++roots;
            s.root = s.nodes[i];
        }
    }
    if (roots != 1) throw InputError("node set is not a connected subtree");
    if (s.nodes.size() > 1) {
        s.leaf_count = static_cast<int>(std::count(degree.begin(), degree.end(), 1));
    }
    return s;
}

} // namespace domset
