// Python bindings for the packing total coloring toolkit. Colorings cross
// the boundary as plain dicts keyed by element tuples: ("v", id) for a
// vertex, ("e", u, v) for an edge.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "packtotal/bounds.hpp"
#include "packtotal/certificate.hpp"
#include "packtotal/coloring.hpp"
#include "packtotal/constructions.hpp"
#include "packtotal/distance.hpp"
#include "packtotal/graph.hpp"
#include "packtotal/solver.hpp"
#include "packtotal/transform.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace packtotal;

namespace {

py::tuple element_key(const Element& e) {
    if (e.is_vertex()) return py::make_tuple("v", e.u);
    return py::make_tuple("e", e.u, e.v);
}

Element element_from_key(const py::tuple& key) {
    if (key.size() == 2 && key[0].cast<std::string>() == "v") {
        return Element::vertex(key[1].cast<int>());
    }
    if (key.size() == 3 && key[0].cast<std::string>() == "e") {
        return Element::edge(key[1].cast<int>(), key[2].cast<int>());
    }
    throw std::invalid_argument("element key must be ('v', id) or ('e', u, v)");
}

py::dict coloring_to_dict(const PackingColoring& c) {
    py::dict out;
    for (const auto& [element, color] : c.assignment) {
        out[element_key(element)] = color;
    }
    return out;
}

PackingColoring coloring_from_dict(const py::dict& d, Target target) {
    PackingColoring c;
    c.target = target;
    for (const auto& item : d) {
        c.assignment[element_from_key(item.first.cast<py::tuple>())] =
            item.second.cast<int>();
    }
    return c;
}

py::dict report_to_dict(const SolveReport& report) {
    py::dict out;
    bool solved = report.status == ReportStatus::Solved;
    out["status"] = solved ? "solved" : "timeout";
    out["value"] = solved ? py::object(py::int_(report.value)) : py::object(py::none());
    out["lower_bound"] = report.lower_bound;
    out["upper_bound"] = report.upper_bound;
    out["witness"] = solved ? py::object(coloring_to_dict(report.witness))
                            : py::object(py::none());
    out["nodes"] = report.stats.nodes;
    out["millis"] = report.stats.millis;
    return out;
}

Budget budget_from_args(long long nodes, double secs) {
    Budget budget;
    budget.node_limit = nodes;
    budget.time_limit_secs = secs;
    return budget;
}

} // namespace

PYBIND11_MODULE(packtotal, m) {
    m.doc() = "Exact packing total coloring toolkit";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::string& edge_list) {
                 return parse_edge_list(edge_list);
             }),
             py::arg("edge_list"), "Parse the \"n m\" edge-list text format")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("to_edge_list", &Graph::to_edge_list)
        .def("connected", &Graph::connected)
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("path", &generate_path, py::arg("n"));
    m.def("cycle", &generate_cycle, py::arg("n"));
    m.def("star", &generate_star, py::arg("n"));
    m.def("complete_bipartite", &generate_complete_bipartite, py::arg("m"), py::arg("n"));
    m.def("d12_segment", &generate_d12_segment, py::arg("length"));

    m.def("graph_hash", &graph_hash, py::arg("graph"),
          "FNV-1a digest of the canonical edge-list bytes");

    m.def(
        "element_distance",
        [](const Graph& g, const py::tuple& a, const py::tuple& b) {
            DistanceMatrix d = all_pairs_distances(g);
            return element_distance(g, d, element_from_key(a), element_from_key(b));
        },
        py::arg("graph"), py::arg("a"), py::arg("b"),
        "Distance between two elements, e.g. ('v', 0) and ('e', 1, 2)");

    m.def(
        "chi_rho",
        [](const Graph& g, long long nodes, double secs) {
            return report_to_dict(chi_rho(g, budget_from_args(nodes, secs)));
        },
        py::arg("graph"), py::arg("budget_nodes") = Budget{}.node_limit,
        py::arg("budget_secs") = Budget{}.time_limit_secs,
        "Exact packing chromatic number with a witness coloring");
    m.def(
        "chi_rho_total",
        [](const Graph& g, long long nodes, double secs) {
            return report_to_dict(chi_rho_total(g, budget_from_args(nodes, secs)));
        },
        py::arg("graph"), py::arg("budget_nodes") = Budget{}.node_limit,
        py::arg("budget_secs") = Budget{}.time_limit_secs,
        "Exact packing total chromatic number with a witness coloring");
    m.def(
        "chi_rho_index",
        [](const Graph& g, long long nodes, double secs) {
            return report_to_dict(chi_rho_index(g, budget_from_args(nodes, secs)));
        },
        py::arg("graph"), py::arg("budget_nodes") = Budget{}.node_limit,
        py::arg("budget_secs") = Budget{}.time_limit_secs,
        "Exact packing chromatic index with a witness coloring");

    m.def(
        "bounds",
        [](const Graph& g) {
            BoundsReport r = compute_bounds(g);
            py::dict out;
            out["alpha"] = r.alpha;
            out["nu"] = r.nu;
            out["diameter"] =
                r.diameter == kInfiniteDistance ? py::object(py::none())
                                                : py::object(py::int_(r.diameter));
            out["lower"] = r.lower;
            out["lower_provenance"] = r.lower_provenance;
            out["upper"] = r.upper;
            out["diam2_exact"] = r.diam2_exact ? py::object(py::int_(*r.diam2_exact))
                                               : py::object(py::none());
            return out;
        },
        py::arg("graph"), "Closed-form bounds on the packing total chromatic number");

    m.def(
        "validate",
        [](const Graph& g, const py::dict& coloring, const std::string& target) {
            DistanceMatrix d = all_pairs_distances(g);
            PackingColoring c = coloring_from_dict(coloring, target_from_name(target));
            std::vector<std::string> out;
            for (const Violation& v : validate_packing(g, d, c)) out.push_back(v.to_string());
            return out;
        },
        py::arg("graph"), py::arg("coloring"), py::arg("target") = "total",
        "Returns the list of packing violations (empty iff valid)");

    m.def("color_star_total", [](int n) { return coloring_to_dict(color_star_total(n)); },
          py::arg("n"));
    m.def("color_path_total", [](int n) { return coloring_to_dict(color_path_total(n)); },
          py::arg("n"));
    m.def("color_cycle_total", [](int n) { return coloring_to_dict(color_cycle_total(n)); },
          py::arg("n"));

    m.def(
        "certificate_json",
        [](const Graph& g, const std::string& target, const py::dict& coloring, int k,
           const std::string& provenance) {
            PackingColoring c = coloring_from_dict(coloring, target_from_name(target));
            return to_json(make_certificate(g, target_from_name(target), c, k, provenance));
        },
        py::arg("graph"), py::arg("target"), py::arg("coloring"), py::arg("k"),
        py::arg("provenance"), "Serialize a coloring as a certificate document");

    m.def(
        "verify_certificate_json",
        [](const std::string& text) {
            VerificationResult r = verify_certificate(certificate_from_json(text));
            return py::make_tuple(r.valid, r.message);
        },
        py::arg("text"), "Re-check a certificate document; returns (valid, message)");

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);
    py::register_exception<SeamRepairError>(m, "SeamRepairError", PyExc_RuntimeError);
}
