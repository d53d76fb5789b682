#include <doctest.h>

#include <algorithm>

#include "domset/generators.hpp"
#include "domset/tree_decomposition.hpp"
#include "oracle_checks.hpp"

using namespace domset;
using namespace domset::testing;

namespace {

TdErrorKind td_error(const Graph& g, std::string_view text) {
    try {
        parse_and_validate_td(g, text);
    } catch (const TdError& e) {
        return e.kind();
    }
    FAIL("accepted: " << text);
    return TdErrorKind::Malformed;
}

// Smallest ρ with B ⊆ N^ρ[c(B)], recomputed by brute force.
int brute_breadth(const Matrix& d, const TreeDecomposition& td) {
    int rho = 0;
    for (int b = 0; b < td.num_bags(); ++b) {
        int best = kFar;
        for (std::size_t c = 0; c < d.size(); ++c) {
            int worst = 0;
            for (Vertex v : td.bags[b]) worst = std::max(worst, d[c][v]);
            best = std::min(best, worst);
        }
        rho = std::max(rho, best);
    }
    return rho;
}

int brute_length(const Matrix& d, const TreeDecomposition& td) {
    int lambda = 0;
    for (const auto& bag : td.bags)
        for (Vertex a : bag)
            for (Vertex b : bag) lambda = std::max(lambda, d[a][b]);
    return lambda;
}

void check_valid(const Graph& g, const TreeDecomposition& td) {
    const int nb = td.num_bags();
    CHECK(nb <= g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK_FALSE(td.bags_of[v].empty());
    for (auto [u, v] : g.edges()) {
        bool inside = false;
        for (const auto& bag : td.bags) inside = inside || (std::binary_search(bag.begin(), bag.end(), u) &&
                                                            std::binary_search(bag.begin(), bag.end(), v));
        CHECK(inside);
    }
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
            if (a != b) CHECK_FALSE(std::includes(td.bags[b].begin(), td.bags[b].end(), td.bags[a].begin(), td.bags[a].end()));
    // Each vertex's bags form a subtree: count of internal tree edges is one less.
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int inner = 0;
        for (auto [a, b] : td.edges) inner += td.contains(a, v) && td.contains(b, v);
        CHECK(inner == static_cast<int>(td.bags_of[v].size()) - 1);
    }
}

} // namespace

TEST_CASE("td parse: triangle and P3") {
    auto tri = graph_of(3, {{1, 2}, {2, 3}, {1, 3}});
    auto t = parse_and_validate_td(tri, "s td 1 3 3\nb 1 1 2 3\n");
    CHECK(t.num_bags() == 1);
    CHECK(t.lambda == 1);
    CHECK_FALSE(t.centers.has_value());
    auto c = compute_centers(tri, t);
    CHECK(c.centers == std::vector<Vertex>{0});
    CHECK(c.rho == 1);

    auto p3 = path_graph(3);
    auto p = parse_and_validate_td(p3, "c comment\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    CHECK(p.num_bags() == 2);
    CHECK(p.lambda == 1);
    ensure_centers(p3, p);
    CHECK(p.rho == 1);
    CHECK(p.centers_computed);
    CHECK(p.total_size() == 4);
    CHECK(p.max_bag_size() == 2);
}

TEST_CASE("td parse: errors") {
    auto p3 = path_graph(3);
    CHECK(td_error(p3, "s td 2 1 3\nb 1 1\nb 2 3\n1 2\n") == TdErrorKind::EdgeUncovered);
    try {
        parse_and_validate_td(p3, "s td 2 1 3\nb 1 1\nb 2 3\n1 2\n");
    } catch (const TdError& e) {
        CHECK(e.witness_u() == 0);
        CHECK(e.witness_v() == 1);
    }
    CHECK(td_error(p3, "s td 2 2 3\nb 1 1 2\nb 2 2 3\n") == TdErrorKind::NotATree);
    CHECK(td_error(p3, "s td 3 2 3\nb 1 1 2\nb 2 2 3\nb 3 2\n1 2\n2 3\n3 1\n") == TdErrorKind::NotATree);
    CHECK(td_error(p3, "s td 3 2 3\nb 1 1 2\nb 2 3\nb 3 2 3\n1 2\n1 3\n") == TdErrorKind::DisconnectedVertexBags);
    CHECK(td_error(p3, "s td 2 3 3\nb 1 1 2\nb 2 2 3\n1 2\n") == TdErrorKind::Malformed);
    CHECK(td_error(p3, "s td 2 2 3\nb 1 1 2\n1 2\n") == TdErrorKind::Malformed);
    CHECK(td_error(p3, "b 1 1 2\n") == TdErrorKind::Malformed);
    CHECK(td_error(p3, "s td 1 2 4\nb 1 1 2\n") == TdErrorKind::Malformed);
    CHECK(td_error(p3, "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\nx c 1 3\n") == TdErrorKind::BadCenter);
    CHECK(td_error(p3, "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\nx c 1 1\nx c 1 2\nx c 2 2\n") == TdErrorKind::BadCenter);
    // Vertex 3 missing entirely; its edge is the first failure.
    CHECK(td_error(p3, "s td 1 2 3\nb 1 1 2\n") == TdErrorKind::EdgeUncovered);
}

TEST_CASE("td: provided centers set the breadth") {
    auto p3 = path_graph(3);
    auto t = parse_and_validate_td(p3, "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\nx c 1 1\nx c 2 2\n");
    REQUIRE(t.centers.has_value());
    CHECK(*t.centers == std::vector<Vertex>{0, 1});
    CHECK(t.rho == 1);
    CHECK_FALSE(t.centers_computed);
    // A far center is accepted but raises ρ.
    auto p5 = path_graph(5);
    auto far = parse_and_validate_td(p5, "s td 4 2 5\nb 1 1 2\nb 2 2 3\nb 3 3 4\nb 4 4 5\n1 2\n2 3\n3 4\n"
                                         "x c 1 5\nx c 2 2\nx c 3 3\nx c 4 4\n");
    CHECK(far.rho == 4);
}

TEST_CASE("td: centers on path and cycle") {
    auto p5 = path_graph(5);
    auto t = make_td(p5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}, {2, 3}});
    auto c = compute_centers(p5, t);
    CHECK(c.centers == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(c.rho == 1);

    // C4 with bags {1,2,3},{1,3,4}: vertices 1 and 3 sit at distance 2, so
    // the middle vertex is the only center at radius 1.
    auto c4 = cycle_graph(4);
    auto t4 = make_td(c4, {{0, 1, 2}, {0, 2, 3}}, {{0, 1}});
    auto cc = compute_centers(c4, t4);
    CHECK(cc.centers == std::vector<Vertex>{1, 3});
    CHECK(cc.rho == 1);
    CHECK(t4.lambda == 2);
}

TEST_CASE("td: normalization contracts subset bags") {
    auto p3 = path_graph(3);
    auto t = make_td(p3, {{0, 1}, {1}, {1, 2}, {2}}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(t.num_bags() == 2);
    CHECK(t.bags[0] == std::vector<Vertex>{0, 1});
    CHECK(t.bags[1] == std::vector<Vertex>{1, 2});
    check_valid(p3, t);

    auto tri = graph_of(3, {{1, 2}, {2, 3}, {1, 3}});
    auto dup = make_td(tri, {{0, 1, 2}, {0, 1, 2}}, {{0, 1}});
    CHECK(dup.num_bags() == 1);
    CHECK(dup.original_ids == std::vector<int>{0});
}

TEST_CASE("td: round-trip through the file format") {
    Rng rng(5);
    for (auto kind : {InstanceKind::Interval, InstanceKind::Spider, InstanceKind::Tree}) {
        GenParams gp;
        gp.kind = kind;
        gp.n = 12;
        gp.seed = 17;
        auto inst = generate(gp);
        const auto& td = *inst.td;
        auto text = write_td(td, inst.graph.num_vertices());
        auto back = parse_and_validate_td(inst.graph, text);
        CHECK(back.bags == td.bags);
        CHECK(back.edges == td.edges);
        CHECK(back.centers == td.centers);
        CHECK(back.rho == td.rho);
        CHECK(back.lambda == td.lambda);
        CHECK(write_td(back, inst.graph.num_vertices()) == text);
    }
}

TEST_CASE("td: elimination-order decompositions are valid; breadth and length") {
    Rng rng(44);
    for (int iter = 0; iter < 200; ++iter) {
        int n = static_cast<int>(rng.uniform(1, 14));
        auto g = random_gnp(n, rng.chance(0.5) ? 0.2 : 0.45, rng);
        auto td = elimination_td(g, rng);
        check_valid(g, td);
        auto d = floyd(g);
        CHECK(td.lambda == brute_length(d, td));
        ensure_centers(g, td);
        CHECK(td.rho == brute_breadth(d, td));
        CHECK(td.lambda <= 2 * td.rho);
        CHECK(td.rho <= td.lambda);
        for (int b = 0; b < td.num_bags(); ++b)
            for (Vertex v : td.bags[b]) CHECK(d[(*td.centers)[b]][v] <= td.rho);
    }
}

TEST_CASE("td: generated interval graphs have unit length and breadth") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenParams gp;
        gp.kind = InstanceKind::Interval;
        gp.n = static_cast<int>(2 + seed % 12);
        gp.seed = seed;
        auto inst = generate(gp);
        REQUIRE(inst.td.has_value());
        check_valid(inst.graph, *inst.td);
        if (inst.graph.num_vertices() > 1) {
            CHECK(inst.td->lambda == 1);
            CHECK(inst.td->rho == 1);
        }
    }
}

TEST_CASE("td: generated spider and tree instances") {
    GenParams gp;
    gp.kind = InstanceKind::Spider;
    auto spider = generate(gp);
    CHECK(spider.graph.num_vertices() == 13);
    CHECK(spider.td->num_bags() == 12);
    CHECK(spider.td->lambda == 1);
    CHECK(spider.td->bags_of[0].size() == 4);
    check_valid(spider.graph, *spider.td);

    gp.kind = InstanceKind::Tree;
    gp.n = 11;
    auto tree = generate(gp);
    CHECK(tree.graph.num_edges() == 10);
    check_valid(tree.graph, *tree.td);
}
