#include "domset/radius.hpp"

#include <sstream>

#include "text_util.hpp"

namespace domset {

RadiusFunction::RadiusFunction(const Graph& g, std::vector<int> radii) : radii_(std::move(radii)) {
    const auto n = g.num_vertices();
    if (radii_.size() != static_cast<std::size_t>(n)) {
        throw InputError("radius function has " + std::to_string(radii_.size()) + " entries, graph has " +
                         std::to_string(n) + " vertices");
    }
    for (std::size_t v = 0; v < radii_.size(); ++v) {
        if (radii_[v] < 0 || radii_[v] > n) {
            throw InputError("radius of vertex " + std::to_string(v + 1) + " is " + std::to_string(radii_[v]) +
                             ", must be in [0, " + std::to_string(n) + "]");
        }
    }
}

RadiusFunction RadiusFunction::uniform(const Graph& g, int radius) {
    return RadiusFunction(g, std::vector<int>(static_cast<std::size_t>(g.num_vertices()), radius));
}

RadiusFunction parse_radii(const Graph& g, std::string_view text, std::optional<int> default_radius) {
    const auto n = g.num_vertices();
    std::vector<int> radii(static_cast<std::size_t>(n), -1);
    for (const auto& line : detail::tokenize_lines(text)) {
        const auto& tok = line.tokens;
        if (tok[0] == "c") continue;
        if (tok[0] != "r" || tok.size() != 3) {
            throw InputError("line " + std::to_string(line.number) + ": expected 'r <v> <value>'");
        }
        auto v = detail::parse_int(tok[1], line.number, "vertex");
        auto value = detail::parse_int(tok[2], line.number, "radius");
        if (v < 1 || v > n) throw InputError("line " + std::to_string(line.number) + ": vertex out of range");
        if (radii[v - 1] != -1) throw InputError("line " + std::to_string(line.number) + ": radius given twice");
        if (value < 0 || value > n) throw InputError("line " + std::to_string(line.number) + ": radius out of range");
        radii[v - 1] = static_cast<int>(value);
    }
    for (std::size_t v = 0; v < radii.size(); ++v) {
        if (radii[v] != -1) continue;
        if (!default_radius) throw InputError("no radius for vertex " + std::to_string(v + 1));
        radii[v] = *default_radius;
    }
    return RadiusFunction(g, std::move(radii));
}

std::string write_radii(const RadiusFunction& r) {
    std::ostringstream out;
    for (std::size_t v = 0; v < r.size(); ++v) out << "r " << (v + 1) << ' ' << r[static_cast<Vertex>(v)] << '\n';
    return out.str();
}

} // namespace domset
