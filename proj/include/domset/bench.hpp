#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/radius.hpp"

namespace domset {

struct BenchInstance {
    std::string name;
    Graph graph;
    RadiusFunction radii;
};

struct BenchRow {
    std::string instance;
    int n = 0;
    std::int64_t m = 0;
    double seconds = 0.0;
    int size = 0;
    int tr_size = 0;
    int delta = 0;
    bool delta_exact = true;
    int delta_final = 0;
    int iterations = 0;
    int iteration_bound = 0;
    bool within_bound = true;
};

/// Largest n for which the bench computes Δ exactly; above it the cheap
/// upper bound is used and labeled.
inline constexpr int kBenchExactDeltaLimit = 5000;

/// 2 * (floor(log2(max(δ, 1))) + 2).
int bench_iteration_bound(int delta_final);

/// Runs connected_rdom_lp on every instance; the timed section covers the
/// whole solve except the Δ certificate.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& suite);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace domset
