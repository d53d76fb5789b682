#include "domset/result.hpp"

#include "domset/bfs.hpp"

namespace domset {

std::vector<int> coverage_margins(const Graph& g, const RadiusFunction& r, std::span<const Vertex> set, int slack) {
    if (set.empty()) throw InputError("coverage of an empty vertex set");
    auto dist = distances_to_set(g, set);
    std::vector<int> margin(dist.size());
    for (std::size_t v = 0; v < dist.size(); ++v) margin[v] = r[static_cast<Vertex>(v)] + slack - dist[v];
    return margin;
}

Vertex first_uncovered(const Graph& g, const RadiusFunction& r, std::span<const Vertex> set, int slack) {
    auto margin = coverage_margins(g, r, set, slack);
    for (std::size_t v = 0; v < margin.size(); ++v) {
        if (margin[v] < 0) return static_cast<Vertex>(v);
    }
    return kNoVertex;
}

} // namespace domset
