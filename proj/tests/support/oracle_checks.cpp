#include "oracle_checks.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace domset::testing {

Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> e;
    for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
    return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Matrix floyd(const Graph& g) {
    const int n = g.num_vertices();
    Matrix d(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(v)) d[v][w] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

std::vector<std::vector<Vertex>> definitional_clusters(const Graph& g, Vertex start) {
    const int n = g.num_vertices();
    auto d = floyd(g);
    std::vector<int> label(n, -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d[start][a] < d[start][b]; });
    for (Vertex v : order) {
        if (label[v] >= 0) continue;
        const int layer = d[start][v];
        // DFS restricted to layers >= `layer`.
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w] && d[start][w] >= layer) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::vector<Vertex> cluster;
        for (int u = 0; u < n; ++u) {
            if (seen[u] && d[start][u] == layer) {
                cluster.push_back(u);
                label[u] = static_cast<int>(out.size());
            }
        }
        out.push_back(std::move(cluster));
    }
    return out;
}

int brute_cluster_diameter(const Matrix& d, const std::vector<std::vector<Vertex>>& clusters) {
    int best = 0;
    for (const auto& c : clusters)
        for (Vertex a : c)
            for (Vertex b : c) best = std::max(best, d[a][b]);
    return best;
}

namespace {

std::vector<int> dist_to(const Matrix& d, const std::vector<Vertex>& set) {
    std::vector<int> out(d.size(), kFar);
    for (std::size_t v = 0; v < d.size(); ++v)
        for (Vertex s : set) out[v] = std::min(out[v], d[v][s]);
    return out;
}

std::vector<Vertex> members(std::uint32_t mask) {
    std::vector<Vertex> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

Matrix tree_matrix(const RootedTree& t) {
    Matrix d;
    for (int v = 0; v < t.size(); ++v) d.push_back(t.distances_from(v));
    return d;
}

bool tree_connected_mask(const RootedTree& t, std::uint32_t mask) {
    // A node set of a tree is connected iff exactly one member has its parent outside.
    int tops = 0;
    for (int v = 0; v < t.size(); ++v) {
        if (!(mask >> v & 1u)) continue;
        int p = t.parent(v);
        if (p < 0 || !(mask >> p & 1u)) ++tops;
    }
    return tops == 1;
}

} // namespace

int max_excess(const Matrix& d, const RadiusFunction& r, const std::vector<Vertex>& set) {
    auto dist = dist_to(d, set);
    int best = -kFar;
    for (std::size_t v = 0; v < d.size(); ++v) best = std::max(best, dist[v] - r[static_cast<Vertex>(v)]);
    return best;
}

int set_eccentricity(const Matrix& d, const std::vector<Vertex>& set) {
    auto dist = dist_to(d, set);
    return *std::max_element(dist.begin(), dist.end());
}

bool dfs_connected(const Graph& g, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (Vertex v : set) in[v] = 1;
    std::vector<Vertex> stack{set.front()};
    seen[set.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    std::vector<Vertex> distinct(set);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return count == distinct.size();
}

bool tree_covers(const RootedTree& t, const std::vector<int>& radii, const std::vector<int>& nodes) {
    for (int v = 0; v < t.size(); ++v) {
        auto dv = t.distances_from(v);
        bool ok = false;
        for (int x : nodes) ok = ok || dv[x] <= radii[v];
        if (!ok) return false;
    }
    return true;
}

int brute_tree_domset_size(const RootedTree& t, const std::vector<int>& radii) {
    const int n = t.size();
    if (n > 20) throw std::invalid_argument("brute_tree_domset_size: tree too large");
    auto d = tree_matrix(t);
    int best = n;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            bool hit = false;
            for (int x = 0; x < n && !hit; ++x) hit = (mask >> x & 1u) && d[v][x] <= radii[v];
            ok = hit;
        }
        if (ok) best = size;
    }
    return best;
}

std::vector<int> brute_tree_min_subtree(const RootedTree& t, const std::vector<int>& radii) {
    const int n = t.size();
    if (n > 20) throw std::invalid_argument("brute_tree_min_subtree: tree too large");
    auto d = tree_matrix(t);
    std::vector<int> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!best.empty() && std::popcount(mask) > static_cast<int>(best.size())) continue;
        if (!tree_connected_mask(t, mask)) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            bool hit = false;
            for (int x = 0; x < n && !hit; ++x) hit = (mask >> x & 1u) && d[v][x] <= radii[v];
            ok = hit;
        }
        if (!ok) continue;
        auto nodes = members(mask);
        if (best.empty() || nodes.size() < best.size() || (nodes.size() == best.size() && nodes < best)) best = nodes;
    }
    return best;
}

int brute_rdom_size(const Graph& g, const RadiusFunction& r, bool connected) {
    const int n = g.num_vertices();
    if (n > 16) throw std::invalid_argument("brute_rdom_size: graph too large");
    auto d = floyd(g);
    int best = n + 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        auto set = members(mask);
        if (max_excess(d, r, set) > 0) continue;
        if (connected && !dfs_connected(g, set)) continue;
        best = size;
    }
    return best;
}

int brute_pcenter_ecc(const Graph& g, int p, bool connected) {
    const int n = g.num_vertices();
    if (n > 16) throw std::invalid_argument("brute_pcenter_ecc: graph too large");
    auto d = floyd(g);
    int best = kFar;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > p) continue;
        auto set = members(mask);
        if (connected && !dfs_connected(g, set)) continue;
        best = std::min(best, set_eccentricity(d, set));
    }
    return best;
}

TreeDecomposition elimination_td(const Graph& g, Rng& rng) {
    const int n = g.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    // Bag i = order[i] plus its later neighbors in the filled graph; it hangs
    // off the bag of its earliest later neighbor.
    std::vector<std::vector<Vertex>> bags(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> later;
        for (int w = 0; w < n; ++w)
            if (adj[v][w] && pos[w] > i) later.push_back(w);
        for (Vertex a : later)
            for (Vertex b : later)
                if (a != b) adj[a][b] = 1;
        bags[i] = later;
        bags[i].push_back(v);
        if (!later.empty()) {
            Vertex next = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
            edges.emplace_back(i, pos[next]);
        } else if (i + 1 < n) {
            edges.emplace_back(i, n - 1);
        }
    }
    return make_td(g, std::move(bags), std::move(edges));
}

std::vector<int> vector_of(const RadiusFunction& r) {
    auto v = r.values();
    return {v.begin(), v.end()};
}

} // namespace domset::testing
