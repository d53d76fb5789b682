// Python module domset._core. Vertices are 0-based on this side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "domset/error.hpp"
#include "domset/generators.hpp"
#include "domset/graph.hpp"
#include "domset/layering.hpp"
#include "domset/lp_domination.hpp"
#include "domset/oracles.hpp"
#include "domset/p_center.hpp"
#include "domset/solution.hpp"
#include "domset/td_domination.hpp"
#include "domset/tree_decomposition.hpp"

namespace py = pybind11;
using namespace domset;

namespace {

using Radii = std::variant<int, std::vector<int>>;

RadiusFunction to_radii(const Graph& g, const Radii& r) {
    if (const int* k = std::get_if<int>(&r)) return RadiusFunction::uniform(g, *k);
    return RadiusFunction(g, std::get<std::vector<int>>(r));
}

LpOptions lp_options(Vertex start, const std::string& delta) {
    LpOptions o;
    o.start = start;
    if (delta == "exact") o.delta_mode = DeltaMode::Exact;
    else if (delta == "upper") o.delta_mode = DeltaMode::UpperBound;
    else if (delta == "skip") o.delta_mode = DeltaMode::Skip;
    else throw InputError("delta must be exact, upper or skip");
    return o;
}

TreeDecomposition with_centers(const Graph& g, TreeDecomposition td) {
    ensure_centers(g, td);
    return td;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "r-domination and p-center approximations on unweighted graphs";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](Vertex n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_static("parse", [](const std::string& text) { return parse_graph(text); })
        .def_static("read", &read_graph_file)
        .def("to_text", [](const Graph& g) { return write_graph(g); })
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("checksum", &Graph::checksum)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
        });

    py::class_<TreeDecomposition>(m, "TreeDecomposition")
        .def_static("parse", [](const Graph& g, const std::string& text) { return parse_and_validate_td(g, text); })
        .def("to_text", [](const TreeDecomposition& td, const Graph& g) { return write_td(td, g.num_vertices()); })
        .def_readonly("bags", &TreeDecomposition::bags)
        .def_readonly("edges", &TreeDecomposition::edges)
        .def_readonly("centers", &TreeDecomposition::centers)
        .def_readonly("rho", &TreeDecomposition::rho)
        .def_readonly("lambda_", &TreeDecomposition::lambda)
        .def_property_readonly("num_bags", &TreeDecomposition::num_bags);

    py::class_<LpDiagnostics>(m, "LpDiagnostics")
        .def_readonly("delta", &LpDiagnostics::delta_cluster)
        .def_readonly("delta_is_upper_bound", &LpDiagnostics::delta_is_upper_bound)
        .def_readonly("delta_known", &LpDiagnostics::delta_known)
        .def_readonly("clusters", &LpDiagnostics::clusters)
        .def_readonly("tr_size", &LpDiagnostics::tr_size)
        .def_readonly("delta_final", &LpDiagnostics::delta_final)
        .def_readonly("iterations", &LpDiagnostics::iterations);

    py::class_<TdDiagnostics>(m, "TdDiagnostics")
        .def_readonly("rho", &TdDiagnostics::rho)
        .def_readonly("lambda_", &TdDiagnostics::lambda)
        .def_readonly("phi", &TdDiagnostics::phi)
        .def_readonly("coverage_bound", &TdDiagnostics::coverage_bound)
        .def_readonly("stated_bound", &TdDiagnostics::stated_bound);

    py::class_<DominationResult>(m, "DominationResult")
        .def_readonly("vertices", &DominationResult::vertices)
        .def_readonly("slack", &DominationResult::slack)
        .def_readonly("connected", &DominationResult::connected)
        .def_readonly("algorithm", &DominationResult::algorithm)
        .def_readonly("lp", &DominationResult::lp)
        .def_readonly("td", &DominationResult::td);

    py::class_<PCenterResult>(m, "PCenterResult")
        .def_readonly("centers", &PCenterResult::centers)
        .def_readonly("eccentricity", &PCenterResult::eccentricity)
        .def_readonly("slack", &PCenterResult::slack)
        .def_readonly("connected", &PCenterResult::connected)
        .def_readonly("algorithm", &PCenterResult::algorithm)
        .def_readonly("lp", &PCenterResult::lp)
        .def_readonly("td", &PCenterResult::td);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("ok", &VerifyReport::ok)
        .def_readonly("failure", &VerifyReport::failure)
        .def_readonly("witness", &VerifyReport::witness)
        .def_readonly("size", &VerifyReport::size)
        .def_readonly("max_excess", &VerifyReport::max_excess);

    m.def("layering_clusters", [](const Graph& g, Vertex start) {
        return build_layering_partition(g, start).clusters;
    }, py::arg("g"), py::arg("start") = 0);
    m.def("cluster_diameter", [](const Graph& g, Vertex start) {
        return cluster_diameter(g, build_layering_partition(g, start));
    }, py::arg("g"), py::arg("start") = 0);

    m.def("rdom_lp", [](const Graph& g, const Radii& r, Vertex start, const std::string& delta) {
        return rdom_lp(g, to_radii(g, r), lp_options(start, delta));
    }, py::arg("g"), py::arg("r"), py::arg("start") = 0, py::arg("delta") = "exact");
    m.def("connected_rdom_lp", [](const Graph& g, const Radii& r, Vertex start, const std::string& delta) {
        return connected_rdom_lp(g, to_radii(g, r), lp_options(start, delta));
    }, py::arg("g"), py::arg("r"), py::arg("start") = 0, py::arg("delta") = "exact");
    m.def("rdom_td", [](const Graph& g, const TreeDecomposition& td, const Radii& r) {
        return rdom_td(g, with_centers(g, td), to_radii(g, r));
    }, py::arg("g"), py::arg("td"), py::arg("r"));
    m.def("connected_rdom_td", [](const Graph& g, const TreeDecomposition& td, const Radii& r,
                                  const std::string& variant) {
        return connected_rdom_td(g, with_centers(g, td), to_radii(g, r), parse_td_variant(variant));
    }, py::arg("g"), py::arg("td"), py::arg("r"), py::arg("variant") = "heart");

    m.def("pcenter_lp", [](const Graph& g, int p, bool connected) {
        return connected ? connected_pcenter_lp(g, p) : pcenter_lp(g, p);
    }, py::arg("g"), py::arg("p"), py::arg("connected") = false);
    m.def("pcenter_td", [](const Graph& g, const TreeDecomposition& td, int p, bool connected,
                           const std::string& variant) {
        return pcenter_td(g, with_centers(g, td), p, connected, parse_td_variant(variant));
    }, py::arg("g"), py::arg("td"), py::arg("p"), py::arg("connected") = false, py::arg("variant") = "heart");

    m.def("exact_rdom", [](const Graph& g, const Radii& r, bool connected) {
        return exact_rdom(g, to_radii(g, r), connected);
    }, py::arg("g"), py::arg("r"), py::arg("connected") = false);
    m.def("exact_pcenter", [](const Graph& g, int p, bool connected) {
        auto c = exact_pcenter(g, p, connected);
        return py::make_tuple(c.centers, c.eccentricity);
    }, py::arg("g"), py::arg("p"), py::arg("connected") = false);

    m.def("verify", [](const Graph& g, const Radii& r, const std::vector<Vertex>& vertices, int slack,
                       bool connected, std::optional<int> size_bound) {
        SolutionFile s;
        s.vertices = vertices;
        s.slack = slack;
        VerifyOptions o;
        o.slack = slack;
        o.connected = connected;
        o.size_bound = size_bound;
        return verify_solution(g, to_radii(g, r), s, o);
    }, py::arg("g"), py::arg("r"), py::arg("vertices"), py::arg("slack") = 0, py::arg("connected") = false,
       py::arg("size_bound") = py::none());

    m.def("generate", [](const std::string& kind, int n, std::uint64_t seed, double edge_probability,
                         double average_degree, int legs, int leg_length, int r_min, int r_max) {
        GenParams gp;
        gp.kind = parse_instance_kind(kind);
        gp.n = n;
        gp.seed = seed;
        gp.edge_probability = edge_probability;
        gp.average_degree = average_degree;
        gp.legs = legs;
        gp.leg_length = leg_length;
        gp.r_min = r_min;
        gp.r_max = r_max;
        auto inst = generate(gp);
        std::vector<int> radii(inst.radii.values().begin(), inst.radii.values().end());
        return py::make_tuple(std::move(inst.graph), std::move(inst.td), std::move(radii));
    }, py::arg("kind"), py::arg("n"), py::arg("seed") = 1, py::arg("edge_probability") = 0.3,
       py::arg("average_degree") = 6.0, py::arg("legs") = 4, py::arg("leg_length") = 3, py::arg("r_min") = 0,
       py::arg("r_max") = 0);
}
