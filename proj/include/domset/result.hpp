#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/radius.hpp"

namespace domset {

/// One δ probe of a one-sided search.
struct ProbeRecord {
    int delta = 0;
    int subtree_size = 0; ///< |T_δ|
    int leaf_count = 0;   ///< Λ(T_δ)
    int set_size = 0;     ///< |S_δ|
    bool accepted = false;
    std::vector<int> join_costs;
};

struct LpDiagnostics {
    int delta_cluster = 0;          ///< Δ, or an upper bound on it
    bool delta_is_upper_bound = false;
    bool delta_known = true;
    int clusters = 0;
    int tr_size = 0;                ///< |T_r| (|T_p| for connected p-center)
    int delta_final = 0;
    int iterations = 0;
    int tight_bound_misses = 0;     ///< probes over |T_δ| + (Λ - 1)Δ
    std::vector<ProbeRecord> probes; ///< filled when requested
};

struct TdDiagnostics {
    int rho = 0;
    int lambda = 0;
    int phi = 0;               ///< radius increase used for T_φ
    int subtree_bags = 0;      ///< |T_r| or |T_φ|
    int path_segments = 0;
    int branching_bags = 0;
    int coverage_bound = 0;    ///< additive slack the result is checked against
    int stated_bound = 0;       ///< 5ρ for HEART, 3λ for DIAMOND, ρ otherwise
    bool centers_computed = false;
};

/// A (connected) (r + φ)-dominating set.
struct DominationResult {
    std::vector<Vertex> vertices; ///< sorted ascending
    std::optional<int> slack;     ///< φ; empty when Δ was not computed
    bool connected = false;
    std::string algorithm;
    std::optional<LpDiagnostics> lp;
    std::optional<TdDiagnostics> td;
};

/// r(v) + slack - d_G(v, set) for every v; all entries >= 0 iff the set is an
/// (r + slack)-dominating set.
std::vector<int> coverage_margins(const Graph& g, const RadiusFunction& r, std::span<const Vertex> set, int slack);

/// First vertex with negative margin, or kNoVertex.
Vertex first_uncovered(const Graph& g, const RadiusFunction& r, std::span<const Vertex> set, int slack);

} // namespace domset
