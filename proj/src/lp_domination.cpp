#include "domset/lp_domination.hpp"

#include <algorithm>
#include <string>

#include "domset/one_sided_search.hpp"
#include "domset/tree_algorithms.hpp"

namespace domset {

void measure_delta(const Graph& g, const LayeringPartition& lp, DeltaMode mode, LpDiagnostics& diag) {
    diag.clusters = lp.num_clusters();
    switch (mode) {
    case DeltaMode::Exact:
        diag.delta_cluster = cluster_diameter(g, lp);
        break;
    case DeltaMode::UpperBound:
        diag.delta_cluster = cluster_diameter_upper_bound(g, lp);
        diag.delta_is_upper_bound = true;
        break;
    case DeltaMode::Skip:
        diag.delta_known = false;
        break;
    }
}

namespace {

void check_radii(const Graph& g, const RadiusFunction& r) {
    if (r.size() != static_cast<std::size_t>(g.num_vertices())) {
        throw InputError("radius function has " + std::to_string(r.size()) + " entries for " +
                         std::to_string(g.num_vertices()) + " vertices");
    }
}

} // namespace

DominationResult rdom_lp(const Graph& g, const RadiusFunction& r, const LpOptions& options) {
    check_radii(g, r);
    auto lp = build_layering_partition(g, options.start);
    auto radii = cluster_radii(lp, r.values());
    auto chosen = tree_r_dominating_set(lp.tree, radii);

    DominationResult out;
    out.algorithm = "rdom-lp";
    for (int c : chosen) out.vertices.push_back(lp.representative(c));
    std::sort(out.vertices.begin(), out.vertices.end());

    LpDiagnostics diag;
    measure_delta(g, lp, options.delta_mode, diag);
    diag.tr_size = static_cast<int>(chosen.size());
    if (diag.delta_known) out.slack = diag.delta_cluster;
    out.lp = std::move(diag);
    return out;
}

LpProbe probe_connected_lp(const Graph& g, const LayeringPartition& lp, std::span<const int> cluster_radii, int delta) {
    if (delta < 0) throw InputError("delta must be non-negative");
    std::vector<int> shifted(cluster_radii.begin(), cluster_radii.end());
    for (int& x : shifted) x += delta;
    LpProbe probe;
    probe.t_delta = tree_min_covering_subtree(lp.tree, shifted);
    probe.connector = connect_cluster_tree(g, lp, probe.t_delta);
    return probe;
}

DominationResult connected_rdom_lp(const Graph& g, const RadiusFunction& r, const LpOptions& options) {
    check_radii(g, r);
    auto lp = build_layering_partition(g, options.start);
    auto radii = cluster_radii(lp, r.values());
    auto t_r = tree_min_covering_subtree(lp.tree, radii);
    const int tr_size = static_cast<int>(t_r.size());

    LpDiagnostics diag;
    measure_delta(g, lp, options.delta_mode, diag);
    diag.tr_size = tr_size;
    std::vector<Vertex> best;
    int best_delta = -1;
    auto accept = [&](int delta) {
        auto probe = probe_connected_lp(g, lp, radii, delta);
        const int t_size = static_cast<int>(probe.t_delta.size());
        // A minimum covering subtree for larger radii shrinks by at least δ
        // per leaf relative to T_r.
        ensure(static_cast<long long>(t_size) <= static_cast<long long>(tr_size) -
                                                     static_cast<long long>(delta) * probe.t_delta.leaf_count,
               "covering subtree for delta " + std::to_string(delta) + " is not smaller than |T_r| - delta * leaves");
        const int s_size = static_cast<int>(probe.connector.vertices.size());
        const bool ok = s_size <= tr_size;
        // The stricter (leaves - 1) * Δ form is only counted, never enforced.
        if (diag.delta_known && probe.t_delta.leaf_count > 0 &&
            s_size > t_size + (probe.t_delta.leaf_count - 1) * diag.delta_cluster) {
            ++diag.tight_bound_misses;
        }
        if (options.record_probes) {
            diag.probes.push_back({delta, t_size, probe.t_delta.leaf_count, s_size, ok, probe.connector.join_costs});
        }
        if (ok && (best_delta < 0 || delta < best_delta)) {
            best_delta = delta;
            best = std::move(probe.connector.vertices);
        }
        return ok;
    };
    auto outcome = one_sided_search(g.num_vertices(), accept);
    ensure(outcome.value == best_delta, "one-sided search returned an unrecorded probe");

    DominationResult out;
    out.algorithm = "crdom-lp";
    out.connected = true;
    out.vertices = std::move(best);
    diag.delta_final = outcome.value;
    diag.iterations = outcome.iterations;
    if (diag.delta_known) out.slack = 2 * diag.delta_cluster;
    out.lp = std::move(diag);
    return out;
}

} // namespace domset
