#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "netmix/distfit.hpp"
#include "netmix/generators.hpp"
#include "netmix/pipeline.hpp"
#include "netmix/report.hpp"
#include "netmix/version.hpp"

namespace py = pybind11;
using namespace netmix;

namespace {

py::object json_to_py(const nlohmann::ordered_json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

void check_node(const graph& g, int v) {
  if (v < 0 || v >= g.node_count()) throw py::index_error("node id out of range");
}

py::dict normalization_dict(const normalization_summary& s) {
  py::dict d;
  d["self_loops_dropped"] = s.self_loops_dropped;
  d["duplicates_collapsed"] = s.duplicates_collapsed;
  return d;
}

py::dict generation_dict(const generation_report& r) {
  py::dict d;
  d["model"] = r.model;
  d["seed"] = r.seed;
  d["rng_algorithm"] = r.rng_algorithm;
  d["nodes"] = r.nodes;
  d["edges"] = r.edges;
  d["isolated_nodes"] = r.isolated_nodes;
  d["skipped_draws"] = r.skipped_draws;
  d["link_steps"] = r.link_steps;
  d["rewire_steps"] = r.rewire_steps;
  d["node_steps"] = r.node_steps;
  d["rewired_edges"] = r.rewired_edges;
  return d;
}

ecc_algorithm algorithm_from_name(const std::string& name) {
  if (name == "naive") return ecc_algorithm::naive;
  if (name == "pruned") return ecc_algorithm::pruned;
  throw std::invalid_argument("unknown eccentricity algorithm: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "edge classification and degree-distribution fitting for undirected networks";
  m.attr("__version__") = std::string(version);

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<disconnected_error>(m, "DisconnectedError", PyExc_ValueError);

  py::class_<graph>(m, "Graph", "Immutable simple undirected graph")
      .def_static(
          "from_edges",
          [](int node_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels) {
            return graph::from_edges(node_count, std::move(edges), std::move(labels));
          },
          py::arg("node_count"), py::arg("edges"),
          py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("node_count", &graph::node_count)
      .def_property_readonly("edge_count", &graph::edge_count)
      .def("edges", [](const graph& g) { return g.edges(); })
      .def(
          "degree",
          [](const graph& g, int v) {
            check_node(g, v);
            return g.degree(v);
          },
          py::arg("v"))
      .def(
          "neighbors",
          [](const graph& g, int v) {
            check_node(g, v);
            const auto nb = g.neighbors(v);
            return std::vector<int>(nb.begin(), nb.end());
          },
          py::arg("v"))
      .def(
          "label",
          [](const graph& g, int v) {
            check_node(g, v);
            return g.label(v);
          },
          py::arg("v"))
      .def("index_of", &graph::index_of, py::arg("label"))
      .def("__repr__", [](const graph& g) {
        return "Graph(nodes=" + std::to_string(g.node_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "parse_edge_list",
      [](const std::string& text) {
        parse_result r = parse_edge_list(text);
        return py::make_tuple(std::move(r.g), normalization_dict(r.normalization));
      },
      py::arg("text"), "Parse edge-list text; returns (graph, normalization dict)");

  m.def(
      "load_edge_list",
      [](const std::string& path) {
        parse_result r = load_edge_list(path);
        return py::make_tuple(std::move(r.g), normalization_dict(r.normalization));
      },
      py::arg("path"), "Load an edge-list file; returns (graph, normalization dict)");

  m.def(
      "analyze",
      [](const graph& g, const std::string& algorithm, int threads,
         bool strict_connected, const std::string& name) {
        analysis_options opts;
        opts.algorithm = algorithm_from_name(algorithm);
        opts.threads = threads;
        opts.strict_connected = strict_connected;
        const analysis_result res = analyze_graph(g, opts);
        provenance prov;
        prov.dataset_name = name;
        prov.ecc_algorithm_name = algorithm;
        prov.tool_version = std::string(version);
        return json_to_py(analysis_report_json(prov, res));
      },
      py::arg("g"), py::arg("algorithm") = "pruned", py::arg("threads") = 1,
      py::arg("strict_connected") = false, py::arg("name") = "graph",
      "Run the full classification and fitting pipeline; returns the report dict");

  m.def(
      "classify",
      [](const graph& g, const std::string& algorithm) {
        const auto profile = compute_eccentricities(g, algorithm_from_name(algorithm));
        const auto levels = assign_levels(g, profile);
        const auto cls = classify_edges(g, levels);
        py::list types;
        for (const edge_type t : cls.label)
          types.append(t == edge_type::p2c ? "P2C" : "P2P");
        return types;
      },
      py::arg("g"), py::arg("algorithm") = "pruned",
      "Edge types aligned with g.edges(), each \"P2C\" or \"P2P\"");

  m.def(
      "build_ccdf",
      [](const std::vector<int>& degrees) {
        const ccdf_table t = build_ccdf(degrees);
        py::list points;
        for (const auto& p : t.points) points.append(py::make_tuple(p.k, p.f));
        return py::make_tuple(points, t.n_samples);
      },
      py::arg("degrees"), "CCDF of a degree multiset; returns (points, n_samples)");

  m.def(
      "fit_power_law",
      [](const std::vector<int>& degrees) {
        return json_to_py(to_json(fit_power_law(build_ccdf(degrees))));
      },
      py::arg("degrees"));

  m.def(
      "fit_weibull",
      [](const std::vector<int>& degrees) {
        return json_to_py(to_json(fit_weibull(build_ccdf(degrees))));
      },
      py::arg("degrees"));

  m.def(
      "generate_ba",
      [](int m0, int m, std::int64_t t, std::uint64_t seed) {
        ba_config cfg;
        cfg.m0 = m0;
        cfg.m = m;
        cfg.t = t;
        cfg.seed = seed;
        generation_result r = generate_ba(cfg);
        return py::make_tuple(std::move(r.g), generation_dict(r.report));
      },
      py::arg("m0") = 2, py::arg("m") = 1, py::arg("t") = 1, py::arg("seed") = 0,
      "Growth with degree-proportional attachment; returns (graph, report dict)");

  m.def(
      "generate_eba",
      [](double p, double q, int m, int m0, std::int64_t t, std::uint64_t seed) {
        eba_config cfg;
        cfg.p = p;
        cfg.q = q;
        cfg.m = m;
        cfg.m0 = m0;
        cfg.t = t;
        cfg.seed = seed;
        generation_result r = generate_eba(cfg);
        return py::make_tuple(std::move(r.g), generation_dict(r.report));
      },
      py::arg("p"), py::arg("q"), py::arg("m") = 1, py::arg("m0") = 2,
      py::arg("t") = 1, py::arg("seed") = 0,
      "Growth with link addition, rewiring, and node addition; returns (graph, report dict)");
}
