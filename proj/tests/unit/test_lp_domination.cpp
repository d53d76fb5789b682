#include <doctest.h>

#include <algorithm>
#include <set>

#include "domset/generators.hpp"
#include "domset/layering.hpp"
#include "domset/lp_domination.hpp"
#include "domset/one_sided_search.hpp"
#include "domset/result.hpp"
#include "domset/tree_algorithms.hpp"
#include "oracle_checks.hpp"

using namespace domset;
using namespace domset::testing;

TEST_CASE("one-sided search: probes and result") {
    std::vector<int> probes;
    auto out = one_sided_search(100, [&](int x) {
        probes.push_back(x);
        return x >= 5;
    });
    CHECK(out.value == 5);
    CHECK(probes == std::vector<int>{0, 1, 3, 7, 5, 4});
    CHECK(out.iterations == 6);

    auto zero = one_sided_search(10, [](int) { return true; });
    CHECK(zero.value == 0);
    CHECK(zero.iterations == 1);

    // The limit itself is probed when doubling overshoots it.
    auto edge = one_sided_search(6, [](int x) { return x >= 6; });
    CHECK(edge.value == 6);

    CHECK_THROWS_AS(one_sided_search(4, [](int) { return false; }), InvariantViolation);

    // Non-monotone predicate: any accepted probe returned is the smallest probed one.
    std::set<int> seen;
    auto odd = one_sided_search(64, [&](int x) {
        seen.insert(x);
        return x >= 20 || x == 3;
    });
    CHECK(odd.value == 3);
    for (int x : seen) CHECK((x >= odd.value || !(x >= 20 || x == 3)));
}

TEST_CASE("one-sided search: iteration count is logarithmic in the answer") {
    for (int target = 0; target <= 2000; ++target) {
        auto out = one_sided_search(1 << 20, [&](int x) { return x >= target; });
        CHECK(out.value == target);
        int floor_log = 0;
        while ((2 << floor_log) <= std::max(target, 1)) ++floor_log;
        CHECK(out.iterations <= 2 * (floor_log + 2));
    }
}

TEST_CASE("rdom_lp: examples") {
    auto p5 = path_graph(5);
    auto a = rdom_lp(p5, RadiusFunction::uniform(p5, 1));
    CHECK(a.vertices.size() <= 2);
    CHECK(a.slack == 0);
    CHECK(max_excess(floyd(p5), RadiusFunction::uniform(p5, 1), a.vertices) <= 0);

    auto c6 = cycle_graph(6);
    auto r1 = RadiusFunction::uniform(c6, 1);
    auto b = rdom_lp(c6, r1);
    CHECK(b.vertices.size() <= 2);
    CHECK(b.slack == 2);
    CHECK(max_excess(floyd(c6), r1, b.vertices) <= 2);
    CHECK(b.algorithm == "rdom-lp");
    CHECK_FALSE(b.connected);

    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        auto g = random_gnp(static_cast<int>(rng.uniform(1, 30)), 0.2, rng);
        CHECK(rdom_lp(g, RadiusFunction::uniform(g, g.num_vertices())).vertices.size() == 1);
    }
}

TEST_CASE("connected_rdom_lp: examples") {
    auto c6 = cycle_graph(6);
    auto a = connected_rdom_lp(c6, RadiusFunction::uniform(c6, 1));
    CHECK(a.vertices == std::vector<Vertex>{1, 2});
    CHECK(a.slack == 4);
    CHECK(a.lp->delta_final == 0);
    CHECK(a.lp->tr_size == 2);
    CHECK(a.connected);

    auto p5 = path_graph(5);
    auto b = connected_rdom_lp(p5, RadiusFunction::uniform(p5, 1));
    CHECK(b.vertices == std::vector<Vertex>{1, 2, 3});
    CHECK(b.lp->delta_final == 0);

    auto star = star_graph(5);
    LpOptions from_center;
    from_center.start = 0;
    auto c = connected_rdom_lp(star, RadiusFunction::uniform(star, 1), from_center);
    CHECK(c.vertices == std::vector<Vertex>{0});
}

TEST_CASE("delta modes") {
    auto c6 = cycle_graph(6);
    auto r = RadiusFunction::uniform(c6, 1);
    LpOptions o;
    o.delta_mode = DeltaMode::UpperBound;
    auto up = rdom_lp(c6, r, o);
    CHECK(up.lp->delta_is_upper_bound);
    CHECK(*up.slack >= 2);
    o.delta_mode = DeltaMode::Skip;
    auto skip = connected_rdom_lp(c6, r, o);
    CHECK_FALSE(skip.slack.has_value());
    CHECK_FALSE(skip.lp->delta_known);
}

TEST_CASE("lp solvers: guarantees on random graphs") {
    Rng rng(2024);
    for (int iter = 0; iter < 250; ++iter) {
        int n = static_cast<int>(rng.uniform(1, 11));
        auto g = random_gnp(n, rng.chance(0.5) ? 0.25 : 0.5, rng);
        auto r = random_radii(g, 0, 3, rng);
        auto d = floyd(g);
        LpOptions o;
        o.start = static_cast<Vertex>(rng.uniform(0, n - 1));
        o.record_probes = true;
        auto lp = build_layering_partition(g, o.start);
        const int delta = cluster_diameter(g, lp);

        auto a = rdom_lp(g, r, o);
        CHECK(a.slack == delta);
        CHECK(max_excess(d, r, a.vertices) <= delta);
        CHECK(static_cast<int>(a.vertices.size()) <= brute_rdom_size(g, r, false));

        auto b = connected_rdom_lp(g, r, o);
        const int opt = brute_rdom_size(g, r, true);
        CHECK(b.slack == 2 * delta);
        CHECK(dfs_connected(g, b.vertices));
        CHECK(max_excess(d, r, b.vertices) <= 2 * delta);
        CHECK(static_cast<int>(b.vertices.size()) <= opt);
        CHECK(b.lp->tr_size <= opt);
        CHECK(b.lp->delta_final <= delta);

        // Every δ >= Δ is accepted.
        auto cr = cluster_radii(lp, r.values());
        for (int x = delta; x <= delta + 2; ++x) {
            auto probe = probe_connected_lp(g, lp, cr, x);
            CHECK(static_cast<int>(probe.connector.vertices.size()) <= b.lp->tr_size);
        }
        for (const auto& p : b.lp->probes) {
            CHECK(p.subtree_size <= b.lp->tr_size - p.delta * p.leaf_count);
            CHECK(p.accepted == (p.set_size <= b.lp->tr_size));
        }
    }
}

TEST_CASE("result helpers") {
    auto p5 = path_graph(5);
    auto r = RadiusFunction::uniform(p5, 1);
    std::vector<Vertex> s{0};
    auto margins = coverage_margins(p5, r, s, 0);
    CHECK(margins == std::vector<int>{1, 0, -1, -2, -3});
    CHECK(first_uncovered(p5, r, s, 0) == 2);
    std::vector<Vertex> good{1, 3};
    CHECK(first_uncovered(p5, r, good, 0) == kNoVertex);
}
