#include <doctest.h>

#include <algorithm>

#include "domset/generators.hpp"
#include "domset/layering.hpp"
#include "oracle_checks.hpp"

using namespace domset;
using namespace domset::testing;

namespace {

std::vector<std::vector<Vertex>> sorted_clusters(const LayeringPartition& lp) {
    auto c = lp.clusters;
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<std::vector<Vertex>> sorted(std::vector<std::vector<Vertex>> c) {
    std::sort(c.begin(), c.end());
    return c;
}

// Checks the partition against the definition and the structural invariants.
void check_partition(const Graph& g, Vertex s) {
    auto lp = build_layering_partition(g, s);
    auto d = floyd(g);
    auto want = definitional_clusters(g, s);
    REQUIRE(sorted_clusters(lp) == sorted(want));
    CHECK(cluster_diameter(g, lp) == brute_cluster_diameter(d, want));
    CHECK(cluster_diameter_upper_bound(g, lp) >= cluster_diameter(g, lp));

    const int k = lp.num_clusters();
    CHECK(lp.tree.root() == lp.cluster_of[s]);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        CHECK(lp.layer[v] == d[s][v]);
        CHECK(lp.cluster_layer[lp.cluster_of[v]] == lp.layer[v]);
        if (v != s) {
            Vertex p = lp.bfs_parent[v];
            REQUIRE(p != kNoVertex);
            CHECK(g.has_edge(v, p));
            CHECK(lp.cluster_of[p] == lp.tree.parent(lp.cluster_of[v]));
        }
    }
    // Tree adjacency equals "some edge of G joins the two clusters".
    std::vector<std::vector<char>> joined(k, std::vector<char>(k, 0));
    for (auto [u, v] : g.edges()) {
        int a = lp.cluster_of[u], b = lp.cluster_of[v];
        if (a != b) joined[a][b] = joined[b][a] = 1;
    }
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            bool tree_edge = lp.tree.parent(a) == b || lp.tree.parent(b) == a;
            CHECK(tree_edge == static_cast<bool>(joined[a][b]));
        }
        if (a != lp.tree.root()) CHECK(lp.cluster_layer[a] == lp.cluster_layer[lp.tree.parent(a)] + 1);
    }
}

} // namespace

TEST_CASE("layering: P5 from an end") {
    auto g = path_graph(5);
    auto lp = build_layering_partition(g, 0);
    CHECK(lp.num_clusters() == 5);
    for (const auto& c : lp.clusters) CHECK(c.size() == 1);
    CHECK(cluster_diameter(g, lp) == 0);
    CHECK(tree_distance(lp, 0, 4) == 4);
    CHECK(tree_distance(lp, 2, 2) == 0);
}

TEST_CASE("layering: C6 from v0") {
    auto g = cycle_graph(6);
    auto lp = build_layering_partition(g, 0);
    std::vector<std::vector<Vertex>> want{{0}, {1, 5}, {2, 4}, {3}};
    CHECK(lp.clusters == want);
    CHECK(lp.tree.parent(1) == 0);
    CHECK(lp.tree.parent(2) == 1);
    CHECK(lp.tree.parent(3) == 2);
    CHECK(cluster_diameter(g, lp) == 2);
    CHECK(tree_distance(lp, 1, 4) == 1);
    CHECK(tree_distance(lp, 1, 5) == 0);
    CHECK(dump_layering_partition(lp) == "C 1 0 1\nC 2 1 2 6\nC 3 2 3 5\nC 4 3 4\nT 1 2\nT 2 3\nT 3 4\n");
}

TEST_CASE("layering: K1,3 from a leaf") {
    // Center is vertex 0.
    auto g = star_graph(3);
    // y and z only meet through the center, one layer up, so they stay apart.
    auto lp = build_layering_partition(g, 1);
    std::vector<std::vector<Vertex>> want{{1}, {0}, {2}, {3}};
    CHECK(lp.clusters == want);
    CHECK(sorted(definitional_clusters(g, 1)) == sorted(want));
    CHECK(cluster_diameter(g, lp) == 0);
    CHECK(lp.tree.parent(2) == 1);
    CHECK(lp.tree.parent(3) == 1);
}

TEST_CASE("layering: bad start vertex") {
    CHECK_THROWS_AS(build_layering_partition(path_graph(3), 3), InputError);
}

TEST_CASE("layering: matches the definition on every connected graph up to 6 vertices") {
    int graphs = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
            std::vector<Edge> e;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (mask >> i & 1u) e.push_back(all[i]);
            Graph g;
            try {
                g = Graph::from_edges(n, e);
            } catch (const GraphError&) {
                continue; // disconnected
            }
            ++graphs;
            for (Vertex s = 0; s < n; ++s) check_partition(g, s);
        }
    }
    CHECK(graphs == 1 + 1 + 4 + 38 + 728 + 26704);
}

TEST_CASE("layering: matches the definition on random graphs up to 64 vertices") {
    Rng rng(21);
    for (int iter = 0; iter < 150; ++iter) {
        int n = static_cast<int>(rng.uniform(7, 64));
        auto g = rng.chance(0.5) ? random_gnp(n, std::min(1.0, 3.0 / n), rng) : random_sparse(n, 2.5, rng);
        check_partition(g, static_cast<Vertex>(rng.uniform(0, n - 1)));
    }
}

TEST_CASE("layering: tree distance sandwiches graph distance") {
    Rng rng(4);
    for (int iter = 0; iter < 200; ++iter) {
        int n = static_cast<int>(rng.uniform(2, 32));
        auto g = random_gnp(n, std::min(1.0, 3.0 / n), rng);
        auto lp = build_layering_partition(g, 0);
        int delta = cluster_diameter(g, lp);
        auto d = floyd(g);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                int dt = tree_distance(lp, u, v);
                CHECK(dt <= d[u][v]);
                CHECK(d[u][v] <= dt + delta);
            }
        }
    }
}

TEST_CASE("cluster radii take the minimum") {
    auto g = cycle_graph(6);
    auto lp = build_layering_partition(g, 0);
    std::vector<int> r{3, 2, 0, 1, 4, 1};
    CHECK(cluster_radii(lp, r) == std::vector<int>{3, 1, 0, 1});
}
