#include "domset/bench.hpp"

#include <bit>
#include <chrono>
#include <iomanip>

#include "domset/layering.hpp"
#include "domset/lp_domination.hpp"

namespace domset {

int bench_iteration_bound(int delta_final) {
    auto d = static_cast<unsigned>(std::max(delta_final, 1));
    int floor_log = static_cast<int>(std::bit_width(d)) - 1;
    return 2 * (floor_log + 2);
}

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& suite) {
    std::vector<BenchRow> rows;
    for (const auto& inst : suite) {
        BenchRow row;
        row.instance = inst.name;
        row.n = inst.graph.num_vertices();
        row.m = inst.graph.num_edges();
        LpOptions options;
        options.delta_mode = DeltaMode::Skip;
        auto start = std::chrono::steady_clock::now();
        auto result = connected_rdom_lp(inst.graph, inst.radii, options);
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        auto lp = build_layering_partition(inst.graph);
        row.delta_exact = row.n <= kBenchExactDeltaLimit;
        row.delta = row.delta_exact ? cluster_diameter(inst.graph, lp) : cluster_diameter_upper_bound(inst.graph, lp);
        row.size = static_cast<int>(result.vertices.size());
        row.tr_size = result.lp->tr_size;
        row.delta_final = result.lp->delta_final;
        row.iterations = result.lp->iterations;
        row.iteration_bound = bench_iteration_bound(row.delta_final);
        row.within_bound = row.iterations <= row.iteration_bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "instance,n,m,seconds,size,tr_size,delta,delta_kind,delta_final,iterations,iteration_bound,within_bound\n";
    for (const auto& r : rows) {
        out << r.instance << ',' << r.n << ',' << r.m << ',' << std::fixed << std::setprecision(6) << r.seconds
            << std::defaultfloat << ',' << r.size << ',' << r.tr_size << ',' << r.delta << ','
            << (r.delta_exact ? "exact" : "upper") << ',' << r.delta_final << ',' << r.iterations << ','
            << r.iteration_bound << ',' << (r.within_bound ? "yes" : "no") << '\n';
    }
}

} // namespace domset
