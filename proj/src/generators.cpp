#include "domset/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace domset {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InputError("empty random range");
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % range + 1) % range;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % range);
}

double Rng::real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

const char* to_string(InstanceKind kind) {
    switch (kind) {
    case InstanceKind::Gnp: return "gnp";
    case InstanceKind::Interval: return "interval";
    case InstanceKind::Spider: return "spider";
    case InstanceKind::Tree: return "tree";
    case InstanceKind::Sparse: return "sparse";
    }
    return "?";
}

InstanceKind parse_instance_kind(const std::string& name) {
    for (auto k : {InstanceKind::Gnp, InstanceKind::Interval, InstanceKind::Spider, InstanceKind::Tree, InstanceKind::Sparse}) {
        if (name == to_string(k)) return k;
    }
    throw InputError("unknown instance kind '" + name + "'");
}

namespace {

bool connected_edges(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

std::vector<Vertex> permutation(int n, Rng& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
}

Instance interval_instance(int n, Rng& rng) {
    // Each left endpoint lies inside the union so far, keeping the graph connected.
    std::vector<int> left(static_cast<std::size_t>(n));
    std::vector<int> right(static_cast<std::size_t>(n));
    int reach = 0;
    for (int i = 0; i < n; ++i) {
        left[i] = i == 0 ? 0 : static_cast<int>(rng.uniform(left[i - 1], reach));
        right[i] = left[i] + static_cast<int>(rng.uniform(0, 3));
        reach = std::max(reach, right[i]);
    }
    auto label = permutation(n, rng);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (left[j] <= right[i]) edges.emplace_back(label[i], label[j]);
        }
    }
    Instance inst;
    inst.graph = Graph::from_edges(n, edges);

    // One bag per distinct left endpoint, in order: a path of cliques.
    std::vector<int> points(left.begin(), left.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<std::vector<Vertex>> bags;
    for (int x : points) {
        std::vector<Vertex> bag;
        for (int i = 0; i < n; ++i) {
            if (left[i] <= x && x <= right[i]) bag.push_back(label[i]);
        }
        bags.push_back(std::move(bag));
    }
    std::vector<std::pair<int, int>> tree;
    for (int b = 1; b < static_cast<int>(bags.size()); ++b) tree.emplace_back(b - 1, b);
    auto td = make_td(inst.graph, std::move(bags), std::move(tree));
    ensure_centers(inst.graph, td);
    td.centers_computed = false;
    inst.td = std::move(td);
    return inst;
}

Instance spider_instance(int legs, int len) {
    if (legs < 0 || len < 0) throw InputError("spider needs non-negative legs and leg length");
    const int n = 1 + legs * len;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> tree;
    // Bag v-1 holds the edge from vertex v up toward the hub.
    for (int k = 0; k < legs; ++k) {
        for (int j = 0; j < len; ++j) {
            Vertex v = 1 + k * len + j;
            Vertex up = j == 0 ? 0 : v - 1;
            edges.emplace_back(up, v);
            bags.push_back({up, v});
            if (j > 0) tree.emplace_back(v - 2, v - 1);
            else if (k > 0) tree.emplace_back(0, v - 1);
        }
    }
    if (bags.empty()) bags.push_back({0});
    Instance inst;
    inst.graph = Graph::from_edges(n, edges);
    auto td = make_td(inst.graph, std::move(bags), std::move(tree));
    ensure_centers(inst.graph, td);
    td.centers_computed = false;
    inst.td = std::move(td);
    return inst;
}

Instance tree_instance(int n, Rng& rng) {
    if (n < 1) throw InputError("tree needs at least one vertex");
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int v = 1; v < n; ++v) parent[v] = static_cast<int>(rng.uniform(0, v - 1));
    auto label = permutation(n, rng);
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> tree;
    // Bag v-1 is the edge {v, parent(v)}; it hangs off its parent's bag, and
    // the root's edges hang off the first of them.
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(label[v], label[parent[v]]);
        bags.push_back({label[v], label[parent[v]]});
        if (parent[v] != 0) tree.emplace_back(v - 1, parent[v] - 1);
        else if (v != 1) tree.emplace_back(v - 1, 0);
    }
    if (bags.empty()) bags.push_back({0});
    Instance inst;
    inst.graph = Graph::from_edges(n, edges);
    auto td = make_td(inst.graph, std::move(bags), std::move(tree));
    ensure_centers(inst.graph, td);
    td.centers_computed = false;
    inst.td = std::move(td);
    return inst;
}

} // namespace

Graph random_gnp(int n, double p, Rng& rng) {
    if (n < 1) throw InputError("gnp needs at least one vertex");
    if (p < 0.0 || p > 1.0) throw InputError("gnp edge probability must be in [0, 1]");
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng.chance(p)) edges.emplace_back(u, v);
            }
        }
        if (connected_edges(n, edges)) return Graph::from_edges(n, edges);
    }
    throw InputError("gnp(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ") stayed disconnected after " +
                     std::to_string(kAttempts) + " attempts");
}

Graph random_sparse(int n, double average_degree, Rng& rng) {
    if (n < 1) throw InputError("sparse graph needs at least one vertex");
    const auto max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    auto target = std::min<std::int64_t>(max_edges, static_cast<std::int64_t>(average_degree * n / 2.0));
    target = std::max<std::int64_t>(target, n - 1);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(target));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(target) * 2);
    auto key = [](Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    };
    auto label = permutation(n, rng);
    for (Vertex v = 1; v < n; ++v) {
        Vertex u = static_cast<Vertex>(rng.uniform(0, v - 1));
        edges.emplace_back(label[u], label[v]);
        seen.insert(key(label[u], label[v]));
    }
    while (static_cast<std::int64_t>(edges.size()) < target) {
        auto u = static_cast<Vertex>(rng.uniform(0, n - 1));
        auto v = static_cast<Vertex>(rng.uniform(0, n - 1));
        if (u == v || !seen.insert(key(u, v)).second) continue;
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph random_tree_graph(int n, Rng& rng) { return tree_instance(n, rng).graph; }

RootedTree random_rooted_tree(int n, Rng& rng) {
    if (n < 1) throw InputError("tree needs at least one node");
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int v = 1; v < n; ++v) parent[v] = static_cast<int>(rng.uniform(0, v - 1));
    return RootedTree::from_parents(std::move(parent));
}

RadiusFunction random_radii(const Graph& g, int lo, int hi, Rng& rng) {
    if (lo < 0 || hi < lo) throw InputError("radius range must satisfy 0 <= lo <= hi");
    const int n = g.num_vertices();
    std::vector<int> r(static_cast<std::size_t>(n));
    for (auto& x : r) x = std::min(n, static_cast<int>(rng.uniform(lo, hi)));
    return RadiusFunction(g, std::move(r));
}

Instance generate(const GenParams& params) {
    Rng rng(params.seed);
    Instance inst;
    switch (params.kind) {
    case InstanceKind::Gnp:
        inst.graph = random_gnp(params.n, params.edge_probability, rng);
        break;
    case InstanceKind::Sparse:
        inst.graph = random_sparse(params.n, params.average_degree, rng);
        break;
    case InstanceKind::Interval:
        if (params.n < 1) throw InputError("interval graph needs at least one vertex");
        inst = interval_instance(params.n, rng);
        break;
    case InstanceKind::Spider:
        inst = spider_instance(params.legs, params.leg_length);
        break;
    case InstanceKind::Tree:
        inst = tree_instance(params.n, rng);
        break;
    }
    inst.radii = random_radii(inst.graph, params.r_min, params.r_max, rng);
    return inst;
}

} // namespace domset
