#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/radius.hpp"
#include "domset/rooted_tree.hpp"
#include "domset/tree_decomposition.hpp"

namespace domset {

/// mt19937_64 with a fixed reduction to ranges, so instances are identical
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, 1).
    double real();
    bool chance(double p) { return real() < p; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
        }
    }

private:
    std::mt19937_64 engine_;
};

enum class InstanceKind { Gnp, Interval, Spider, Tree, Sparse };

const char* to_string(InstanceKind kind);
InstanceKind parse_instance_kind(const std::string& name);

struct GenParams {
    InstanceKind kind = InstanceKind::Gnp;
    int n = 10;
    double edge_probability = 0.3; ///< gnp
    double average_degree = 6.0;   ///< sparse: m ≈ n * average_degree / 2
    int legs = 4;                  ///< spider
    int leg_length = 3;            ///< spider
    int r_min = 0;
    int r_max = 0;
    std::uint64_t seed = 1;
};

struct Instance {
    Graph graph;
    std::optional<TreeDecomposition> td; ///< interval, spider and tree kinds
    RadiusFunction radii;
};

/// Deterministic in params. gnp retries until connected and gives up with
/// InputError after a fixed number of attempts.
Instance generate(const GenParams& params);

/// Random connected G(n, p).
Graph random_gnp(int n, double p, Rng& rng);
/// Random spanning tree plus random extra edges up to about n * deg / 2 edges.
Graph random_sparse(int n, double average_degree, Rng& rng);
/// Random recursive tree on n nodes as a graph (vertex ids shuffled).
Graph random_tree_graph(int n, Rng& rng);
/// Random rooted tree on n nodes, root 0.
RootedTree random_rooted_tree(int n, Rng& rng);

/// Uniform radii in [lo, hi], clamped to [0, n].
RadiusFunction random_radii(const Graph& g, int lo, int hi, Rng& rng);

} // namespace domset
