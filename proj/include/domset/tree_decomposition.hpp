#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domset/graph.hpp"
#include "domset/rooted_tree.hpp"

namespace domset {

/// A validated, minimal tree-decomposition of a graph. Bags are 0-based
/// internally (file ids minus one) and renumbered densely after
/// normalization, preserving the original relative order.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;         ///< sorted
    std::vector<std::pair<int, int>> edges;         ///< bag-tree edges, a < b
    std::vector<std::vector<int>> adjacency;        ///< sorted
    std::vector<std::vector<int>> bags_of;          ///< per vertex, sorted
    std::optional<std::vector<Vertex>> centers;     ///< c(B) per bag
    bool centers_computed = false;                  ///< centers came from compute_centers
    int rho = -1;                                   ///< breadth for `centers`; -1 without centers
    int lambda = 0;                                 ///< max distance inside a bag
    std::vector<int> original_ids;                  ///< 0-based id of each bag in the input

    int num_bags() const noexcept { return static_cast<int>(bags.size()); }
    std::int64_t total_size() const noexcept;       ///< M = sum of bag sizes
    std::size_t max_bag_size() const noexcept;
    bool contains(int bag, Vertex v) const;

    /// The bag tree rooted at `root`.
    RootedTree rooted_at(int root) const;
};

enum class TdErrorKind {
    Malformed,
    NotATree,
    VertexUncovered,
    EdgeUncovered,
    DisconnectedVertexBags,
    BadCenter,
};

const char* to_string(TdErrorKind kind);

/// Validation failure with a witness (vertex, edge endpoints or bag; -1 if
/// not applicable), all 0-based.
class TdError : public InputError {
public:
    TdError(TdErrorKind kind, const std::string& what, Vertex u = kNoVertex, Vertex v = kNoVertex, int bag = -1)
        : InputError(what), kind_(kind), u_(u), v_(v), bag_(bag) {}
    TdErrorKind kind() const noexcept { return kind_; }
    Vertex witness_u() const noexcept { return u_; }
    Vertex witness_v() const noexcept { return v_; }
    int witness_bag() const noexcept { return bag_; }

private:
    TdErrorKind kind_;
    Vertex u_;
    Vertex v_;
    int bag_;
};

/// Unvalidated content of a .td file.
struct TdFile {
    int declared_bags = 0;
    int declared_max_bag = 0;
    int declared_n = 0;
    std::vector<std::vector<Vertex>> bags;          ///< 0-based bag ids and vertices
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, Vertex>> centers;    ///< (bag, vertex)
};

/// Grammar: `s td <bags> <max_bag> <n>`, `b <id> <v>...`, `<i> <j>` per tree
/// edge, `x c <bag> <vertex>` per center; `c` lines are comments.
TdFile parse_td_file(std::string_view text);

/// Checks the three decomposition properties, contracts bags contained in a
/// neighbor, computes λ and, when centers are given, verifies them and
/// derives ρ. Without centers rho stays -1 until compute_centers.
TreeDecomposition validate_td(const Graph& g, const TdFile& file);

TreeDecomposition parse_and_validate_td(const Graph& g, std::string_view text);
TreeDecomposition read_td_file(const Graph& g, const std::string& path);

/// Builds a decomposition from in-memory parts (0-based) and validates it.
TreeDecomposition make_td(const Graph& g, std::vector<std::vector<Vertex>> bags, std::vector<std::pair<int, int>> edges,
                          std::optional<std::vector<Vertex>> centers = {});

struct CenterAssignment {
    std::vector<Vertex> centers;
    int rho = 0;
};

/// c(B) minimizes max_{u in B} d_G(c, u); smallest id on ties.
CenterAssignment compute_centers(const Graph& g, const TreeDecomposition& td);

/// Fills td.centers and td.rho from compute_centers if absent.
void ensure_centers(const Graph& g, TreeDecomposition& td);

/// Exact λ: max over bags of the largest pairwise distance inside the bag.
int td_length(const Graph& g, const std::vector<std::vector<Vertex>>& bags);

/// Bag breadth with respect to given centers.
int td_breadth(const Graph& g, const std::vector<std::vector<Vertex>>& bags, const std::vector<Vertex>& centers);

std::string write_td(const TreeDecomposition& td, Vertex n);

} // namespace domset
