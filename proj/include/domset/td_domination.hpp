#pragma once

#include <span>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/radius.hpp"
#include "domset/result.hpp"
#include "domset/rooted_tree.hpp"
#include "domset/tree_decomposition.hpp"

namespace domset {

/// A connected set of bags reaching every vertex within its radius:
/// d_G(v, B) <= r(v) for some bag B of the set.
struct CoveringSubtreeTD {
    int root = -1;              ///< the bag the construction started from
    std::vector<int> bags;      ///< sorted
    std::vector<int> beta;      ///< per vertex: its bag of the set closest to root
    std::vector<int> sigma;     ///< per bag of the decomposition: |{v : beta(v) = B}|
    RootedTree tree;            ///< the whole bag tree rooted at `root`

    std::size_t size() const noexcept { return bags.size(); }
    bool contains(int bag) const;
};

/// Smallest covering subtree that contains bag `start`. Radii may exceed n.
CoveringSubtreeTD covering_subtree_from_bag(const Graph& g, const TreeDecomposition& td, std::span<const int> radii,
                                            int start);

/// Minimum covering subtree: from bag 0, then again from the smallest leaf of
/// the first result when it has two or more bags.
CoveringSubtreeTD min_covering_subtree_td(const Graph& g, const TreeDecomposition& td, std::span<const int> radii);

/// (r + ρ)-dominating set no larger than a minimum r-dominating set.
/// Requires td.centers.
DominationResult rdom_td(const Graph& g, const TreeDecomposition& td, const RadiusFunction& r);

enum class TdVariant {
    Heart,   ///< routes through bag centers; φ = 3ρ
    Diamond, ///< connects separators directly; φ = 2λ
};

const char* to_string(TdVariant v);
TdVariant parse_td_variant(const std::string& name);

/// Per-run structure of the connected construction, for checking.
struct SeparatorReport {
    std::vector<int> leaves;
    std::vector<std::vector<int>> segments;   ///< bags of each path segment, top to bottom
    std::vector<int> branching;
    std::vector<int> segment_added;           ///< |C_P|: path vertices not in S↑(P)
    std::vector<int> segment_distance;        ///< d_G(S↑(P), S↓(P))
    std::vector<int> hop_lengths;             ///< every path added at branching bags
};

struct ConnectedTdResult {
    DominationResult result;
    SeparatorReport report;
};

/// Connected (r + φ + λ)-dominating set no larger than a minimum connected
/// r-dominating set. HEART computes centers when the decomposition has none.
ConnectedTdResult connected_rdom_td_detailed(const Graph& g, const TreeDecomposition& td, const RadiusFunction& r,
                                             TdVariant variant);
DominationResult connected_rdom_td(const Graph& g, const TreeDecomposition& td, const RadiusFunction& r,
                                   TdVariant variant);

} // namespace domset
