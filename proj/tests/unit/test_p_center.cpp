#include <doctest.h>

#include <algorithm>

#include "domset/bfs.hpp"
#include "domset/generators.hpp"
#include "domset/layering.hpp"
#include "domset/lp_domination.hpp"
#include "domset/p_center.hpp"
#include "domset/td_domination.hpp"
#include "oracle_checks.hpp"

using namespace domset;
using namespace domset::testing;

TEST_CASE("pcenter_via_rdom: examples") {
    auto p5 = path_graph(5);
    UniformSolver lp = [](const Graph& g, const RadiusFunction& r) { return rdom_lp(g, r); };
    auto a = pcenter_via_rdom(p5, 1, lp, false);
    CHECK(a.eccentricity == 2);
    CHECK(a.centers.size() == 1);
    CHECK(a.slack == 0);
    auto b = pcenter_via_rdom(p5, 2, lp, false);
    CHECK(b.eccentricity <= 1);
    auto c = pcenter_via_rdom(p5, 5, lp, false);
    CHECK(c.eccentricity == 0);
    CHECK(c.radius_index == 0);
    CHECK_THROWS_AS(pcenter_via_rdom(p5, 0, lp, false), InputError);
    CHECK_THROWS_AS(pcenter_via_rdom(p5, 6, lp, false), InputError);
}

TEST_CASE("pcenter_via_rdom keeps the smallest feasible probe") {
    // A solver whose size is non-monotone in the radius: feasible at 1 and >= 4.
    auto p9 = path_graph(9);
    std::vector<int> probed;
    UniformSolver odd = [&](const Graph& g, const RadiusFunction& r) {
        const int i = r[0];
        probed.push_back(i);
        DominationResult res;
        res.slack = 0;
        if (i == 1 || i >= 4) {
            res.vertices = {4};
        } else {
            res.vertices = {0, 1, 2, 3, 5, 6};
        }
        (void)g;
        return res;
    };
    auto out = pcenter_via_rdom(p9, 2, odd, false);
    CHECK(std::find(probed.begin(), probed.end(), out.radius_index) != probed.end());
    CHECK(out.centers.size() <= 2);
    for (int i : probed) {
        if (i < out.radius_index) CHECK_FALSE((i == 1 || i >= 4));
    }
}

TEST_CASE("pcenter_lp and connected_pcenter_lp: examples") {
    auto c6 = cycle_graph(6);
    auto a = pcenter_lp(c6, 1);
    CHECK(a.centers.size() == 1);
    CHECK(a.eccentricity <= 3 + 2);
    CHECK(a.eccentricity == eccentricity(c6, a.centers));
    CHECK(a.slack == 2);

    auto p5 = path_graph(5);
    CHECK(pcenter_lp(p5, 2).eccentricity <= 1);
    CHECK(pcenter_lp(p5, 5).eccentricity == 0);

    auto b = connected_pcenter_lp(c6, 2);
    CHECK(b.centers.size() <= 2);
    CHECK(dfs_connected(c6, b.centers));
    CHECK(b.eccentricity <= 2 + 4);
    CHECK(b.slack == 4);

    auto c = connected_pcenter_lp(p5, 3);
    CHECK(c.centers.size() <= 3);
    CHECK(c.eccentricity <= 1);

    auto d = connected_pcenter_lp(c6, 6);
    CHECK(d.eccentricity <= 4);
    CHECK(d.connected);
}

TEST_CASE("pcenter_td: examples") {
    auto p3 = path_graph(3);
    // With the middle vertex as both centers the single center is optimal.
    auto mid = make_td(p3, {{0, 1}, {1, 2}}, {{0, 1}}, std::vector<Vertex>{1, 1});
    auto a = pcenter_td(p3, mid, 1, false, TdVariant::Heart);
    CHECK(a.centers == std::vector<Vertex>{1});
    CHECK(a.eccentricity == 1);
    CHECK(a.slack == 1);
    // Computed centers pick vertex 1 for the first bag; still within opt + ρ.
    auto td = make_td(p3, {{0, 1}, {1, 2}}, {{0, 1}});
    ensure_centers(p3, td);
    auto b = pcenter_td(p3, td, 1, false, TdVariant::Heart);
    CHECK(b.centers.size() == 1);
    CHECK(b.eccentricity <= 1 + td.rho);

    auto tri = graph_of(3, {{1, 2}, {2, 3}, {1, 3}});
    auto one = make_td(tri, {{0, 1, 2}}, {});
    ensure_centers(tri, one);
    CHECK(pcenter_td(tri, one, 1, false, TdVariant::Heart).eccentricity <= 2);

    GenParams gp;
    gp.kind = InstanceKind::Interval;
    gp.n = 12;
    gp.seed = 3;
    auto inst = generate(gp);
    auto res = pcenter_td(inst.graph, *inst.td, 2, true, TdVariant::Diamond);
    CHECK(res.centers.size() <= 2);
    CHECK(dfs_connected(inst.graph, res.centers));
    CHECK(res.eccentricity <= brute_pcenter_ecc(inst.graph, 2, true) + 3 * inst.td->lambda);
}

TEST_CASE("p-center solvers against the oracle") {
    Rng rng(515);
    for (int iter = 0; iter < 200; ++iter) {
        int n = static_cast<int>(rng.uniform(1, 11));
        auto g = random_gnp(n, rng.chance(0.5) ? 0.25 : 0.5, rng);
        auto lp = build_layering_partition(g, 0);
        const int delta = cluster_diameter(g, lp);
        auto td = elimination_td(g, rng);
        ensure_centers(g, td);
        for (int p = 1; p <= std::min(3, n); ++p) {
            const int opt = brute_pcenter_ecc(g, p, false);
            const int copt = brute_pcenter_ecc(g, p, true);

            auto a = pcenter_lp(g, p);
            CHECK(static_cast<int>(a.centers.size()) <= p);
            CHECK(a.eccentricity == eccentricity(g, a.centers));
            CHECK(a.eccentricity <= opt + delta);

            auto b = connected_pcenter_lp(g, p);
            CHECK(static_cast<int>(b.centers.size()) <= p);
            CHECK(dfs_connected(g, b.centers));
            CHECK(b.eccentricity <= copt + 2 * delta);

            auto c = pcenter_td(g, td, p, false, TdVariant::Heart);
            CHECK(static_cast<int>(c.centers.size()) <= p);
            CHECK(c.eccentricity <= opt + td.rho);

            auto h = pcenter_td(g, td, p, true, TdVariant::Heart);
            CHECK(static_cast<int>(h.centers.size()) <= p);
            CHECK(dfs_connected(g, h.centers));
            CHECK(h.eccentricity <= copt + 3 * td.rho + td.lambda);

            auto dmd = pcenter_td(g, td, p, true, TdVariant::Diamond);
            CHECK(static_cast<int>(dmd.centers.size()) <= p);
            CHECK(dmd.eccentricity <= copt + 3 * td.lambda);
        }
    }
}
