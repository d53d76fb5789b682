#include "domset/tree_algorithms.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace domset {
namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

void check_radii(const RootedTree& t, std::span<const int> radii) {
    if (static_cast<int>(radii.size()) != t.size()) {
        throw InputError("tree radii: expected " + std::to_string(t.size()) + " values");
    }
    for (int r : radii) {
        if (r < 0) throw InputError("tree radii must be non-negative");
    }
}

// The tree re-rooted at `root`: parent pointers and a pre-order.
struct Rerooted {
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> preorder;
};

Rerooted reroot(const RootedTree& t, int root) {
    Rerooted out;
    const auto n = static_cast<std::size_t>(t.size());
    out.parent.assign(n, -1);
    out.depth.assign(n, 0);
    out.preorder.reserve(n);
    std::vector<int> stack{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.preorder.push_back(u);
        auto push = [&](int w) {
            if (w < 0 || seen[w]) return;
            seen[w] = 1;
            out.parent[w] = u;
            out.depth[w] = out.depth[u] + 1;
            stack.push_back(w);
        };
        auto kids = t.children(u);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) push(*it);
        push(t.parent(u));
    }
    return out;
}

int smallest_leaf_other_than(const RootedTree& t, const Subtree& s, int excluded) {
    for (int v : s.nodes) {
        if (v == excluded) continue;
        int degree = 0;
        if (t.parent(v) >= 0 && s.contains(t.parent(v))) ++degree;
        for (int c : t.children(v)) {
            if (s.contains(c)) ++degree;
        }
        if (degree == 1) return v;
    }
    throw InvariantViolation("covering subtree with two or more nodes has no second leaf");
}

Subtree single_node_cover(const RootedTree& t, std::span<const int> radii) {
    auto excess = tree_excess(t, radii);
    for (int x = 0; x < t.size(); ++x) {
        if (excess[x] <= 0) return make_subtree(t, {x});
    }
    throw InvariantViolation("single-node cover expected but none covers the tree");
}

} // namespace

std::vector<int> tree_r_dominating_set(const RootedTree& t, std::span<const int> radii) {
    check_radii(t, radii);
    const auto n = static_cast<std::size_t>(t.size());
    // cover[v]: distance from v to the nearest chosen node in v's subtree.
    // need[v]: tightest remaining slack r(u) - d(u, v) over demands u in v's
    // subtree that are not yet covered; kInf when none are pending.
    std::vector<int> cover(n, kInf);
    std::vector<int> need(n, kInf);
    std::vector<int> chosen;
    auto order = t.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int c = kInf;
        int q = std::min(radii[v], kInf - 1);
        for (int child : t.children(v)) {
            if (cover[child] < kInf) c = std::min(c, cover[child] + 1);
            if (need[child] < kInf) q = std::min(q, need[child] - 1);
        }
        if (c <= q) q = kInf;
        if (q == 0 || (v == t.root() && q < kInf)) {
            chosen.push_back(v);
            c = 0;
            q = kInf;
        }
        cover[v] = c;
        need[v] = q;
    }
    if (chosen.size() == 1) return single_node_cover(t, radii).nodes;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

Subtree tree_covering_subtree_containing(const RootedTree& t, std::span<const int> radii, int anchor) {
    check_radii(t, radii);
    if (anchor < 0 || anchor >= t.size()) throw InputError("anchor node out of range");
    const auto n = static_cast<std::size_t>(t.size());
    auto rr = reroot(t, anchor);

    // For every node v, its farthest ancestor (toward the anchor) within
    // distance r(v) is the node of its r-ball closest to the anchor.
    std::vector<int> path(n, -1);
    std::vector<char> in(n, 0);
    in[anchor] = 1;
    std::vector<int> marks;
    marks.reserve(n);
    for (int v : rr.preorder) {
        path[rr.depth[v]] = v;
        int up = std::min(radii[v], rr.depth[v]);
        marks.push_back(path[rr.depth[v] - up]);
    }
    for (int m : marks) {
        for (int x = m; !in[x]; x = rr.parent[x]) in[x] = 1;
    }
    std::vector<int> nodes;
    for (int v = 0; v < t.size(); ++v) {
        if (in[v]) nodes.push_back(v);
    }
    return make_subtree(t, std::move(nodes));
}

Subtree tree_min_covering_subtree(const RootedTree& t, std::span<const int> radii) {
    auto first = tree_covering_subtree_containing(t, radii, t.root());
    if (first.size() == 1) return single_node_cover(t, radii);
    int leaf = smallest_leaf_other_than(t, first, t.root());
    auto second = tree_covering_subtree_containing(t, radii, leaf);
    if (second.size() == 1) return single_node_cover(t, radii);
    return second;
}

std::vector<int> tree_excess(const RootedTree& t, std::span<const int> radii) {
    check_radii(t, radii);
    const auto n = static_cast<std::size_t>(t.size());
    constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;
    std::vector<long long> down(n, kNegInf);
    std::vector<long long> up(n, kNegInf);
    auto order = t.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        long long best = -static_cast<long long>(radii[v]);
        for (int c : t.children(v)) best = std::max(best, down[c] + 1);
        down[v] = best;
    }
    for (int v : order) {
        auto kids = t.children(v);
        const std::size_t k = kids.size();
        std::vector<long long> prefix(k + 1, kNegInf);
        std::vector<long long> suffix(k + 1, kNegInf);
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = std::max(prefix[i], down[kids[i]] + 1);
        for (std::size_t i = k; i > 0; --i) suffix[i - 1] = std::max(suffix[i], down[kids[i - 1]] + 1);
        long long outside = std::max(up[v], -static_cast<long long>(radii[v]));
        for (std::size_t i = 0; i < k; ++i) {
            long long best = std::max({outside, prefix[i], suffix[i + 1]});
            up[kids[i]] = best + 1;
        }
    }
    std::vector<int> excess(n);
    for (std::size_t v = 0; v < n; ++v) excess[v] = static_cast<int>(std::max(down[v], up[v]));
    return excess;
}

int tree_eccentricity(const RootedTree& t, std::span<const int> nodes) {
    if (nodes.empty()) throw InputError("eccentricity of an empty node set");
    std::vector<int> dist(static_cast<std::size_t>(t.size()), -1);
    std::vector<int> queue;
    for (int v : nodes) {
        if (dist[v] == -1) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    int ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        ecc = std::max(ecc, dist[u]);
        auto visit = [&](int w) {
            if (w >= 0 && dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        };
        visit(t.parent(u));
        for (int c : t.children(u)) visit(c);
    }
    return ecc;
}

TreeCenter tree_p_center(const RootedTree& t, int p) {
    if (p < 1 || p > t.size()) throw InputError("p must be in [1, " + std::to_string(t.size()) + "]");
    int lo = 0;
    int hi = t.diameter();
    auto solve = [&](int e) { return tree_r_dominating_set(t, std::vector<int>(static_cast<std::size_t>(t.size()), e)); };
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (static_cast<int>(solve(mid).size()) <= p) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    TreeCenter out;
    out.nodes = solve(lo);
    out.eccentricity = tree_eccentricity(t, out.nodes);
    return out;
}

TreeConnectedCenter tree_connected_p_center(const RootedTree& t, int p) {
    if (p < 1 || p > t.size()) throw InputError("p must be in [1, " + std::to_string(t.size()) + "]");
    int lo = 0;
    int hi = t.diameter();
    auto solve = [&](int e) {
        return tree_min_covering_subtree(t, std::vector<int>(static_cast<std::size_t>(t.size()), e));
    };
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (static_cast<int>(solve(mid).size()) <= p) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    TreeConnectedCenter out;
    out.subtree = solve(lo);
    out.eccentricity = tree_eccentricity(t, out.subtree.nodes);
    return out;
}

} // namespace domset
