#include "domset/p_center.hpp"

#include <algorithm>

#include "domset/bfs.hpp"
#include "domset/cluster_connector.hpp"
#include "domset/layering.hpp"
#include "domset/one_sided_search.hpp"
#include "domset/tree_algorithms.hpp"

namespace domset {

namespace {

void check_p(const Graph& g, int p) {
    if (p < 1 || p > g.num_vertices()) {
        throw InputError("p must be in [1, " + std::to_string(g.num_vertices()) + "]");
    }
}

} // namespace

PCenterResult pcenter_via_rdom(const Graph& g, int p, const UniformSolver& solver, bool connected) {
    check_p(g, p);
    const Vertex n = g.num_vertices();
    std::optional<DominationResult> best;
    int best_i = -1;
    int iterations = 0;
    int lo = 0;
    int hi = n;
    // Feasibility need not be monotone in i; every i >= the optimum is
    // feasible, so the search keeps the smallest feasible probe it has seen.
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        ++iterations;
        auto d = solver(g, RadiusFunction::uniform(g, mid));
        if (static_cast<int>(d.vertices.size()) <= p) {
            if (best_i < 0 || mid < best_i) {
                best_i = mid;
                best = std::move(d);
            }
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    ensure(best.has_value(), "no uniform radius in [0, n] gave a set of at most p vertices");

    PCenterResult out;
    out.centers = best->vertices;
    out.eccentricity = eccentricity(g, out.centers);
    out.slack = best->slack;
    out.connected = connected;
    out.algorithm = "pcenter-via-" + best->algorithm;
    out.radius_index = best_i;
    out.iterations = iterations;
    out.lp = best->lp;
    out.td = best->td;
    return out;
}

PCenterResult pcenter_lp(const Graph& g, int p, const LpOptions& options) {
    check_p(g, p);
    auto lp = build_layering_partition(g, options.start);
    int k = std::min(p, lp.num_clusters());
    auto center = tree_p_center(lp.tree, k);

    PCenterResult out;
    out.algorithm = "pcenter-lp";
    for (int c : center.nodes) out.centers.push_back(lp.representative(c));
    std::sort(out.centers.begin(), out.centers.end());
    out.eccentricity = eccentricity(g, out.centers);
    LpDiagnostics diag;
    measure_delta(g, lp, options.delta_mode, diag);
    diag.tr_size = static_cast<int>(center.nodes.size());
    if (diag.delta_known) out.slack = diag.delta_cluster;
    out.lp = std::move(diag);
    return out;
}

PCenterResult connected_pcenter_lp(const Graph& g, int p, const LpOptions& options) {
    check_p(g, p);
    auto lp = build_layering_partition(g, options.start);
    int k = std::min(p, lp.num_clusters());
    auto t_p = tree_connected_p_center(lp.tree, k).subtree;

    // T_δ lives inside T_p: solve on the induced tree, then map back.
    std::vector<int> host;
    auto inner = lp.tree.induced(t_p.nodes, host);

    LpDiagnostics diag;
    diag.tr_size = static_cast<int>(t_p.size());
    std::vector<Vertex> best;
    int best_delta = -1;
    auto accept = [&](int delta) {
        auto local = tree_min_covering_subtree(inner, std::vector<int>(static_cast<std::size_t>(inner.size()), delta));
        std::vector<int> nodes;
        for (int x : local.nodes) nodes.push_back(host[x]);
        auto t_delta = make_subtree(lp.tree, std::move(nodes));
        auto conn = connect_cluster_tree(g, lp, t_delta);
        const bool ok = static_cast<int>(conn.vertices.size()) <= p;
        if (options.record_probes) {
            diag.probes.push_back({delta, static_cast<int>(t_delta.size()), t_delta.leaf_count,
                                   static_cast<int>(conn.vertices.size()), ok, conn.join_costs});
        }
        if (ok && (best_delta < 0 || delta < best_delta)) {
            best_delta = delta;
            best = std::move(conn.vertices);
        }
        return ok;
    };
    auto outcome = one_sided_search(std::max(inner.size(), 1), accept);
    ensure(outcome.value == best_delta, "one-sided search returned an unrecorded probe");

    PCenterResult out;
    out.algorithm = "cpcenter-lp";
    out.connected = true;
    out.centers = std::move(best);
    out.eccentricity = eccentricity(g, out.centers);
    measure_delta(g, lp, options.delta_mode, diag);
    diag.delta_final = outcome.value;
    diag.iterations = outcome.iterations;
    if (diag.delta_known) out.slack = 2 * diag.delta_cluster;
    out.radius_index = outcome.value;
    out.iterations = outcome.iterations;
    out.lp = std::move(diag);
    return out;
}

PCenterResult pcenter_td(const Graph& g, const TreeDecomposition& td, int p, bool connected, TdVariant variant) {
    if (connected) {
        return pcenter_via_rdom(
            g, p, [&](const Graph& gg, const RadiusFunction& r) { return connected_rdom_td(gg, td, r, variant); }, true);
    }
    return pcenter_via_rdom(g, p, [&](const Graph& gg, const RadiusFunction& r) { return rdom_td(gg, td, r); }, false);
}

} // namespace domset
