#include "domset/solution.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "domset/bfs.hpp"
#include "text_util.hpp"

namespace domset {

std::string format_checksum(std::uint64_t checksum) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum));
    return buf;
}

SolutionFile parse_solution(std::string_view text) {
    SolutionFile s;
    std::optional<int> size;
    bool have_slack = false;
    for (const auto& line : detail::tokenize_lines(text)) {
        const auto& tok = line.tokens;
        auto where = "line " + std::to_string(line.number) + ": ";
        auto number = [&](std::string_view t, const char* what) {
            auto v = detail::parse_int(t, line.number, what);
            if (v < 0 || v > (1ll << 31) - 1) throw InputError(where + what + " out of range");
            return static_cast<int>(v);
        };
        if (tok[0] == "c") continue;
        if (tok[0] == "s" && tok.size() == 3) {
            if (tok[1] == "algo") {
                s.algorithm = std::string(tok[2]);
            } else if (tok[1] == "checksum") {
                std::uint64_t value = 0;
                auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), value, 16);
                if (ec != std::errc() || ptr != tok[2].data() + tok[2].size()) throw InputError(where + "bad checksum");
                s.checksum = value;
            } else if (tok[1] == "size") {
                size = number(tok[2], "size");
            } else if (tok[1] == "slack") {
                s.slack = number(tok[2], "slack");
                have_slack = true;
            } else {
                throw InputError(where + "unknown 's' field '" + std::string(tok[1]) + "'");
            }
        } else if (tok[0] == "v" && tok.size() == 2) {
            int v = number(tok[1], "vertex");
            if (v < 1) throw InputError(where + "vertex ids are 1-based");
            s.vertices.push_back(v - 1);
        } else if (tok[0] == "e" && tok.size() == 3 && tok[1] == "ecc") {
            s.eccentricity = number(tok[2], "eccentricity");
        } else {
            throw InputError(where + "unrecognized solution line");
        }
    }
    if (!size) throw InputError("solution file lacks 's size'");
    if (!have_slack) throw InputError("solution file lacks 's slack'");
    if (*size != static_cast<int>(s.vertices.size())) {
        throw InputError("solution declares size " + std::to_string(*size) + " but lists " +
                         std::to_string(s.vertices.size()) + " vertices");
    }
    return s;
}

std::string write_solution(const SolutionFile& s) {
    std::ostringstream out;
    if (!s.algorithm.empty()) out << "s algo " << s.algorithm << '\n';
    if (s.checksum) out << "s checksum " << format_checksum(*s.checksum) << '\n';
    out << "s size " << s.vertices.size() << '\n';
    out << "s slack " << s.slack << '\n';
    for (Vertex v : s.vertices) out << "v " << (v + 1) << '\n';
    if (s.eccentricity) out << "e ecc " << *s.eccentricity << '\n';
    return out.str();
}

VerifyReport verify_solution(const Graph& g, const RadiusFunction& r, const SolutionFile& solution,
                             const VerifyOptions& options) {
    VerifyReport report;
    report.size = static_cast<int>(solution.vertices.size());
    auto fail = [&](std::string why) {
        if (report.ok) {
            report.ok = false;
            report.failure = std::move(why);
        }
    };
    if (options.expected_checksum && solution.checksum && *options.expected_checksum != *solution.checksum) {
        fail("checksum " + format_checksum(*solution.checksum) + " does not match the graph (" +
             format_checksum(*options.expected_checksum) + ")");
    }
    for (Vertex v : solution.vertices) {
        if (!g.valid(v)) {
            fail("vertex " + std::to_string(v + 1) + " is not in the graph");
            return report;
        }
    }
    if (solution.vertices.empty()) {
        fail("empty vertex set");
        return report;
    }
    auto dist = distances_to_set(g, solution.vertices);
    report.max_excess = dist[0] - r[0];
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int excess = dist[v] - r[v];
        report.max_excess = std::max(report.max_excess, excess);
        if (excess > options.slack && report.witness == kNoVertex) {
            report.witness = v;
            report.witness_distance = dist[v];
            fail("vertex " + std::to_string(v + 1) + " is at distance " + std::to_string(dist[v]) + " > r + slack = " +
                 std::to_string(r[v] + options.slack));
        }
    }
    if (options.connected && !induces_connected(g, solution.vertices)) fail("solution does not induce a connected subgraph");
    if (options.size_bound && report.size > *options.size_bound) {
        fail("size " + std::to_string(report.size) + " exceeds the bound " + std::to_string(*options.size_bound));
    }
    return report;
}

} // namespace domset
