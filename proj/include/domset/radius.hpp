#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

/// Per-vertex demand radii r(v), each in [0, n].
class RadiusFunction {
public:
    RadiusFunction() = default;
    RadiusFunction(const Graph& g, std::vector<int> radii);

    static RadiusFunction uniform(const Graph& g, int radius);

    int operator[](Vertex v) const noexcept { return radii_[static_cast<std::size_t>(v)]; }
    std::size_t size() const noexcept { return radii_.size(); }
    std::span<const int> values() const noexcept { return radii_; }

private:
    std::vector<int> radii_;
};

/// Radii file: lines `r <v> <value>` (1-based v). Every vertex must be listed
/// unless `default_radius` is given, in which case it fills the gaps.
RadiusFunction parse_radii(const Graph& g, std::string_view text, std::optional<int> default_radius = {});
std::string write_radii(const RadiusFunction& r);

} // namespace domset
