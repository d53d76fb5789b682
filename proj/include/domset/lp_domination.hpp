#pragma once

#include <span>
#include <vector>

#include "domset/cluster_connector.hpp"
#include "domset/graph.hpp"
#include "domset/layering.hpp"
#include "domset/radius.hpp"
#include "domset/result.hpp"

namespace domset {

enum class DeltaMode {
    Exact,      ///< Δ by one BFS per clustered vertex
    UpperBound, ///< cheap bound, reported as such
    Skip,       ///< no slack certificate
};

struct LpOptions {
    Vertex start = 0;
    DeltaMode delta_mode = DeltaMode::Exact;
    bool record_probes = false;
};

/// (r + Δ)-dominating set no larger than a minimum r-dominating set.
DominationResult rdom_lp(const Graph& g, const RadiusFunction& r, const LpOptions& options = {});

/// Connected (r + 2Δ)-dominating set no larger than a minimum connected
/// r-dominating set.
DominationResult connected_rdom_lp(const Graph& g, const RadiusFunction& r, const LpOptions& options = {});

struct LpProbe {
    Subtree t_delta;
    ConnectorResult connector;
};

/// One probe of the connected search: T_δ is the minimum covering subtree of
/// the cluster tree for radii r(C) + δ, S_δ its connector.
LpProbe probe_connected_lp(const Graph& g, const LayeringPartition& lp, std::span<const int> cluster_radii, int delta);

/// Δ according to the requested mode; fills the Δ fields of diag.
void measure_delta(const Graph& g, const LayeringPartition& lp, DeltaMode mode, LpDiagnostics& diag);

} // namespace domset
