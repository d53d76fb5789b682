// domset: command-line front end for the domination and p-center solvers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domset/bench.hpp"
#include "domset/bfs.hpp"
#include "domset/generators.hpp"
#include "domset/graph.hpp"
#include "domset/layering.hpp"
#include "domset/lp_domination.hpp"
#include "domset/oracles.hpp"
#include "domset/p_center.hpp"
#include "domset/radius.hpp"
#include "domset/solution.hpp"
#include "domset/td_domination.hpp"
#include "domset/tree_decomposition.hpp"

namespace {

using nlohmann::json;
using namespace domset;

enum Exit { kOk = 0, kInvariant = 1, kUsage = 2, kInput = 3, kBudget = 4, kVerifyFailed = 5 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
}

struct Common {
    std::string graph;
    std::string radii;
    std::optional<int> default_r;
    int start = 1;
    bool json = false;
    std::string out;
    std::string delta = "exact";

    void add_graph(CLI::App* app) { app->add_option("-g,--graph", graph, ".gr file")->required(); }
    void add_radii(CLI::App* app) {
        app->add_option("--radii", radii, "radii file (lines 'r <v> <value>')");
        app->add_option("--default-r", default_r, "radius for vertices missing from --radii");
    }
    void add_output(CLI::App* app) {
        app->add_flag("--json", json, "JSON output");
        app->add_option("-o,--output", out, "write to file instead of stdout");
    }
    void add_lp(CLI::App* app) {
        app->add_option("--start", start, "start vertex of the layering (1-based)");
        app->add_option("--delta", delta, "cluster diameter: exact or upper")->check(CLI::IsMember({"exact", "upper"}));
    }

    Graph load_graph() const { return read_graph_file(graph); }

    RadiusFunction load_radii(const Graph& g) const {
        if (radii.empty()) {
            if (!default_r) throw UsageError("give --radii or --default-r");
            if (*default_r < 0 || *default_r > g.num_vertices()) throw InputError("--default-r must be in [0, n]");
            return RadiusFunction::uniform(g, *default_r);
        }
        return parse_radii(g, slurp(radii), default_r);
    }

    LpOptions lp_options(const Graph& g) const {
        if (start < 1 || start > g.num_vertices()) throw InputError("--start out of range");
        LpOptions o;
        o.start = start - 1;
        o.delta_mode = delta == "upper" ? DeltaMode::UpperBound : DeltaMode::Exact;
        return o;
    }
};

json lp_json(const LpDiagnostics& d) {
    json j = {{"clusters", d.clusters}, {"tr_size", d.tr_size}, {"delta_final", d.delta_final},
              {"iterations", d.iterations}, {"tight_bound_misses", d.tight_bound_misses}};
    if (d.delta_known) {
        j["delta"] = d.delta_cluster;
        j["delta_kind"] = d.delta_is_upper_bound ? "upper" : "exact";
    }
    return j;
}

json td_json(const TdDiagnostics& d) {
    return {{"rho", d.rho},
            {"lambda", d.lambda},
            {"phi", d.phi},
            {"subtree_bags", d.subtree_bags},
            {"path_segments", d.path_segments},
            {"branching_bags", d.branching_bags},
            {"coverage_bound", d.coverage_bound},
            {"stated_bound", d.stated_bound},
            {"centers_computed", d.centers_computed}};
}

// Diagnostics appear as `c key value` lines in text and as an object in JSON.
std::vector<std::pair<std::string, std::string>> diag_lines(const std::optional<LpDiagnostics>& lp,
                                                            const std::optional<TdDiagnostics>& td) {
    std::vector<std::pair<std::string, std::string>> out;
    if (lp) {
        if (lp->delta_known) out.emplace_back("delta", std::to_string(lp->delta_cluster) + (lp->delta_is_upper_bound ? " upper" : " exact"));
        out.emplace_back("clusters", std::to_string(lp->clusters));
        out.emplace_back("tr_size", std::to_string(lp->tr_size));
        out.emplace_back("delta_final", std::to_string(lp->delta_final));
        out.emplace_back("iterations", std::to_string(lp->iterations));
        if (lp->tight_bound_misses > 0) out.emplace_back("tight_bound_misses", std::to_string(lp->tight_bound_misses));
    }
    if (td) {
        out.emplace_back("rho", std::to_string(td->rho));
        out.emplace_back("lambda", std::to_string(td->lambda));
        out.emplace_back("phi", std::to_string(td->phi));
        out.emplace_back("subtree_bags", std::to_string(td->subtree_bags));
        out.emplace_back("coverage_bound", std::to_string(td->coverage_bound));
        out.emplace_back("stated_bound", std::to_string(td->stated_bound));
        if (td->centers_computed) out.emplace_back("centers", "computed");
    }
    return out;
}

void emit_solution(const Common& c, const Graph& g, const std::string& algorithm, std::vector<Vertex> vertices,
                   int slack, std::optional<int> ecc, bool connected, const std::optional<LpDiagnostics>& lp,
                   const std::optional<TdDiagnostics>& td) {
    SolutionFile s;
    s.algorithm = algorithm;
    s.checksum = g.checksum();
    s.slack = slack;
    s.vertices = std::move(vertices);
    s.eccentricity = ecc;
    if (c.json) {
        json j = {{"algorithm", s.algorithm},
                  {"checksum", format_checksum(*s.checksum)},
                  {"size", s.vertices.size()},
                  {"slack", s.slack},
                  {"connected", connected}};
        json vs = json::array();
        for (Vertex v : s.vertices) vs.push_back(v + 1);
        j["vertices"] = vs;
        if (ecc) j["eccentricity"] = *ecc;
        if (lp) j["lp"] = lp_json(*lp);
        if (td) j["td"] = td_json(*td);
        emit(j.dump(2) + "\n", c.out);
        return;
    }
    std::string text = write_solution(s);
    for (const auto& [k, v] : diag_lines(lp, td)) text += "c " + k + " " + v + "\n";
    emit(text, c.out);
}

int slack_or_fail(const std::optional<int>& slack) {
    if (!slack) throw InvariantViolation("solver returned no slack certificate");
    return *slack;
}

TreeDecomposition load_td(const Graph& g, const std::string& path, bool need_centers) {
    if (path.empty()) throw UsageError("--method td needs --td <file>");
    auto td = read_td_file(g, path);
    if (need_centers && !td.centers) {
        std::cerr << "c decomposition has no centers; computing them\n";
        ensure_centers(g, td);
    }
    return td;
}

TdVariant pick_variant(const std::string& name, const Graph& g, TreeDecomposition& td) {
    if (name != "best") return parse_td_variant(name);
    ensure_centers(g, td);
    // Guaranteed slack: 3ρ + λ for HEART, 3λ for DIAMOND.
    return 3 * td.rho + td.lambda < 3 * td.lambda ? TdVariant::Heart : TdVariant::Diamond;
}

int run(int argc, char** argv) {
    CLI::App app{"Parameterized approximations for (connected) r-domination and p-center"};
    app.require_subcommand(1);
    Common c;

    auto* lp_build = app.add_subcommand("lp-build", "build and dump the layering partition");
    c.add_graph(lp_build);
    c.add_lp(lp_build);
    c.add_output(lp_build);

    std::string method = "lp";
    std::string td_path;
    std::string variant = "heart";
    auto add_method = [&](CLI::App* sub, bool with_variant) {
        sub->add_option("--method", method, "lp or td")->check(CLI::IsMember({"lp", "td"}));
        sub->add_option("--td", td_path, ".td file for --method td");
        if (with_variant) {
            sub->add_option("--variant", variant, "heart, diamond or best")
                ->check(CLI::IsMember({"heart", "diamond", "best"}));
        }
    };

    auto* rdom = app.add_subcommand("rdom", "(r + φ)-dominating set");
    c.add_graph(rdom);
    c.add_radii(rdom);
    c.add_lp(rdom);
    c.add_output(rdom);
    add_method(rdom, false);

    auto* crdom = app.add_subcommand("crdom", "connected (r + φ)-dominating set");
    c.add_graph(crdom);
    c.add_radii(crdom);
    c.add_lp(crdom);
    c.add_output(crdom);
    add_method(crdom, true);

    int p = 1;
    bool connected = false;
    auto* pcenter = app.add_subcommand("pcenter", "p-center with additive error");
    c.add_graph(pcenter);
    c.add_lp(pcenter);
    c.add_output(pcenter);
    add_method(pcenter, true);
    pcenter->add_option("-p", p, "number of centers")->required();
    pcenter->add_flag("--connected", connected, "connected p-center");

    std::string problem;
    int max_n = OracleBudget{}.max_vertices;
    auto* oracle = app.add_subcommand("oracle", "exact solution by exhaustive search (small graphs)");
    oracle->add_option("problem", problem, "rdom, crdom, pcenter or cpcenter")
        ->required()
        ->check(CLI::IsMember({"rdom", "crdom", "pcenter", "cpcenter"}));
    c.add_graph(oracle);
    c.add_radii(oracle);
    c.add_output(oracle);
    oracle->add_option("-p", p, "number of centers");
    oracle->add_option("--max-n", max_n, "vertex budget")->check(CLI::Range(1, 31));

    GenParams gen_params;
    std::string kind = "gnp";
    std::string prefix;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", kind, "gnp, sparse, interval, spider or tree")
        ->check(CLI::IsMember({"gnp", "sparse", "interval", "spider", "tree"}));
    gen->add_option("-n", gen_params.n, "vertex count");
    gen->add_option("--p-edge", gen_params.edge_probability, "edge probability (gnp)");
    gen->add_option("--avg-degree", gen_params.average_degree, "average degree (sparse)");
    gen->add_option("--legs", gen_params.legs, "legs (spider)");
    gen->add_option("--leg-length", gen_params.leg_length, "leg length (spider)");
    auto* r_min_opt = gen->add_option("--r-min", gen_params.r_min, "smallest radius");
    auto* r_max_opt = gen->add_option("--r-max", gen_params.r_max, "largest radius");
    gen->add_option("--seed", gen_params.seed, "random seed");
    gen->add_option("-o,--output", prefix, "output prefix: writes <prefix>.gr, .td, .radii");

    std::string solution_path;
    std::optional<int> slack;
    std::optional<int> bound;
    std::string oracle_solution;
    auto* verify = app.add_subcommand("verify", "check a solution file");
    c.add_graph(verify);
    c.add_radii(verify);
    verify->add_option("--solution", solution_path, "solution file")->required();
    verify->add_option("--slack", slack, "allowed additive slack (default: the declared `s slack`)");
    verify->add_flag("--connected", connected, "require a connected set");
    verify->add_option("--bound", bound, "maximum allowed size");
    verify->add_option("--oracle-solution", oracle_solution, "solution file whose size is the bound");
    verify->add_flag("--json", c.json, "JSON output");

    std::vector<std::string> bench_graphs;
    std::vector<int> bench_sizes;
    auto* bench = app.add_subcommand("bench", "time connected_rdom_lp and check search iterations");
    bench->add_option("-g,--graph", bench_graphs, ".gr files");
    bench->add_option("-n", bench_sizes, "sizes of generated sparse instances");
    bench->add_option("--avg-degree", gen_params.average_degree, "average degree of generated instances");
    bench->add_option("--seed", gen_params.seed, "seed of generated instances");
    bench->add_option("--default-r", c.default_r, "uniform radius (default 1)");
    bench->add_option("-o,--output", c.out, "CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*lp_build) {
            auto g = c.load_graph();
            auto opts = c.lp_options(g);
            auto lp = build_layering_partition(g, opts.start);
            LpDiagnostics d;
            measure_delta(g, lp, opts.delta_mode, d);
            if (c.json) {
                json clusters = json::array();
                for (int k = 0; k < lp.num_clusters(); ++k) {
                    json vs = json::array();
                    for (Vertex v : lp.clusters[k]) vs.push_back(v + 1);
                    clusters.push_back({{"id", k + 1}, {"layer", lp.cluster_layer[k]}, {"vertices", vs}});
                }
                json edges = json::array();
                for (int k : lp.tree.bfs_order()) {
                    for (int ch : lp.tree.children(k)) edges.push_back({k + 1, ch + 1});
                }
                json j = {{"clusters", clusters}, {"tree", edges}, {"delta", d.delta_cluster},
                          {"delta_kind", d.delta_is_upper_bound ? "upper" : "exact"}};
                emit(j.dump(2) + "\n", c.out);
            } else {
                emit(dump_layering_partition(lp) + "c delta " + std::to_string(d.delta_cluster) +
                         (d.delta_is_upper_bound ? " upper\n" : " exact\n"),
                     c.out);
            }
            return kOk;
        }
        if (*rdom || *crdom) {
            const bool want_connected = static_cast<bool>(*crdom);
            auto g = c.load_graph();
            auto r = c.load_radii(g);
            DominationResult res;
            if (method == "lp") {
                auto opts = c.lp_options(g);
                res = want_connected ? connected_rdom_lp(g, r, opts) : rdom_lp(g, r, opts);
            } else {
                auto td = load_td(g, td_path, !want_connected);
                res = want_connected ? connected_rdom_td(g, td, r, pick_variant(variant, g, td)) : rdom_td(g, td, r);
            }
            emit_solution(c, g, res.algorithm, res.vertices, slack_or_fail(res.slack), std::nullopt, res.connected,
                          res.lp, res.td);
            return kOk;
        }
        if (*pcenter) {
            auto g = c.load_graph();
            PCenterResult res;
            if (method == "lp") {
                auto opts = c.lp_options(g);
                res = connected ? connected_pcenter_lp(g, p, opts) : pcenter_lp(g, p, opts);
            } else {
                auto td = load_td(g, td_path, !connected);
                res = pcenter_td(g, td, p, connected, connected ? pick_variant(variant, g, td) : TdVariant::Heart);
            }
            emit_solution(c, g, res.algorithm, res.centers, slack_or_fail(res.slack), res.eccentricity, res.connected,
                          res.lp, res.td);
            return kOk;
        }
        if (*oracle) {
            auto g = c.load_graph();
            OracleBudget budget;
            budget.max_vertices = max_n;
            if (problem == "rdom" || problem == "crdom") {
                auto r = c.load_radii(g);
                auto set = exact_rdom(g, r, problem == "crdom", budget);
                emit_solution(c, g, "oracle-" + problem, set, 0, std::nullopt, problem == "crdom", {}, {});
            } else {
                auto best = exact_pcenter(g, p, problem == "cpcenter", budget);
                emit_solution(c, g, "oracle-" + problem, best.centers, 0, best.eccentricity, problem == "cpcenter", {}, {});
            }
            return kOk;
        }
        if (*gen) {
            gen_params.kind = parse_instance_kind(kind);
            if (r_min_opt->count() && !r_max_opt->count()) gen_params.r_max = gen_params.r_min;
            auto inst = generate(gen_params);
            if (prefix.empty()) {
                std::cout << write_graph(inst.graph);
                return kOk;
            }
            emit(write_graph(inst.graph), prefix + ".gr");
            if (inst.td) emit(write_td(*inst.td, inst.graph.num_vertices()), prefix + ".td");
            if (r_min_opt->count() || r_max_opt->count()) emit(write_radii(inst.radii), prefix + ".radii");
            return kOk;
        }
        if (*verify) {
            auto g = c.load_graph();
            auto r = c.load_radii(g);
            auto sol = parse_solution(slurp(solution_path));
            VerifyOptions vo;
            vo.slack = slack.value_or(sol.slack);
            vo.connected = connected;
            vo.size_bound = bound;
            vo.expected_checksum = g.checksum();
            if (!oracle_solution.empty()) {
                int oracle_size = static_cast<int>(parse_solution(slurp(oracle_solution)).vertices.size());
                vo.size_bound = bound ? std::min(*bound, oracle_size) : oracle_size;
            }
            auto rep = verify_solution(g, r, sol, vo);
            if (c.json) {
                json j = {{"ok", rep.ok}, {"size", rep.size}, {"max_excess", rep.max_excess}};
                if (!rep.ok) j["failure"] = rep.failure;
                if (rep.witness != kNoVertex) {
                    j["witness"] = rep.witness + 1;
                    j["witness_distance"] = rep.witness_distance;
                }
                std::cout << j.dump(2) << "\n";
            } else if (rep.ok) {
                std::cout << "OK size " << rep.size << " max_excess " << rep.max_excess << "\n";
            } else {
                std::cout << "FAIL " << rep.failure;
                if (rep.witness != kNoVertex) std::cout << " (witness " << (rep.witness + 1) << ")";
                std::cout << "\n";
            }
            return rep.ok ? kOk : kVerifyFailed;
        }
        if (*bench) {
            std::vector<BenchInstance> suite;
            const int radius = c.default_r.value_or(1);
            for (const auto& path : bench_graphs) {
                auto g = read_graph_file(path);
                auto r = RadiusFunction::uniform(g, std::min(radius, g.num_vertices()));
                suite.push_back({path, std::move(g), std::move(r)});
            }
            for (int n : bench_sizes) {
                Rng rng(gen_params.seed + static_cast<std::uint64_t>(n));
                auto g = random_sparse(n, gen_params.average_degree, rng);
                auto r = RadiusFunction::uniform(g, std::min(radius, g.num_vertices()));
                suite.push_back({"sparse-" + std::to_string(n), std::move(g), std::move(r)});
            }
            auto rows = run_bench(suite);
            std::ostringstream csv;
            write_bench_csv(csv, rows);
            emit(csv.str(), c.out);
            for (const auto& row : rows) {
                if (!row.within_bound) {
                    std::cerr << "error: " << row.instance << ": " << row.iterations << " search iterations exceed "
                              << row.iteration_bound << "\n";
                    return kInvariant;
                }
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    return kUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
}
