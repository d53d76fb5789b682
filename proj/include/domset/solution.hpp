#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.hpp"
#include "domset/radius.hpp"

namespace domset {

/// Solution file:
///   s algo <id>          (optional)
///   s checksum <hex>     (optional; graph checksum)
///   s size <k>
///   s slack <φ>
///   v <vertex>           (k lines, 1-based)
///   e ecc <value>        (optional)
struct SolutionFile {
    std::string algorithm;
    std::optional<std::uint64_t> checksum;
    int slack = 0;
    std::vector<Vertex> vertices; ///< 0-based, in file order
    std::optional<int> eccentricity;

    bool operator==(const SolutionFile&) const = default;
};

SolutionFile parse_solution(std::string_view text);
std::string write_solution(const SolutionFile& s);

struct VerifyOptions {
    int slack = 0;
    bool connected = false;
    std::optional<int> size_bound; ///< e.g. an oracle optimum
    std::optional<std::uint64_t> expected_checksum;
};

struct VerifyReport {
    bool ok = true;
    std::string failure;                ///< empty when ok
    Vertex witness = kNoVertex;         ///< first uncovered vertex, if any
    int witness_distance = 0;
    int size = 0;
    int max_excess = 0;                 ///< max over v of d(v, S) - r(v)
};

/// Coverage d(v, S) <= r(v) + slack for all v, connectivity when asked and
/// the size bound when given; the first failing check is reported.
VerifyReport verify_solution(const Graph& g, const RadiusFunction& r, const SolutionFile& solution,
                             const VerifyOptions& options);

std::string format_checksum(std::uint64_t checksum);

} // namespace domset
