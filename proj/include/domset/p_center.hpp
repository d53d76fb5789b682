#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/lp_domination.hpp"
#include "domset/radius.hpp"
#include "domset/result.hpp"
#include "domset/td_domination.hpp"
#include "domset/tree_decomposition.hpp"

namespace domset {

struct PCenterResult {
    std::vector<Vertex> centers; ///< sorted, at most p
    int eccentricity = 0;        ///< ecc_G(centers)
    std::optional<int> slack;    ///< additive error certificate
    bool connected = false;
    std::string algorithm;
    int radius_index = -1;       ///< uniform radius of the accepted probe, when searching
    int iterations = 0;
    std::optional<LpDiagnostics> lp;
    std::optional<TdDiagnostics> td;
};

/// An (r + φ)-domination solver used with uniform radii.
using UniformSolver = std::function<DominationResult(const Graph&, const RadiusFunction&)>;

/// Binary search over uniform radii i in [0, n], keeping the best probe
/// with |D_i| <= p.
PCenterResult pcenter_via_rdom(const Graph& g, int p, const UniformSolver& solver, bool connected);

/// Tree p-center of the cluster tree, one representative per chosen cluster.
PCenterResult pcenter_lp(const Graph& g, int p, const LpOptions& options = {});

/// Connected variant: covering subtrees of the tree's optimal connected
/// p-center joined by the cluster connector.
PCenterResult connected_pcenter_lp(const Graph& g, int p, const LpOptions& options = {});

/// pcenter_via_rdom with rdom_td or connected_rdom_td.
PCenterResult pcenter_td(const Graph& g, const TreeDecomposition& td, int p, bool connected, TdVariant variant);

} // namespace domset
