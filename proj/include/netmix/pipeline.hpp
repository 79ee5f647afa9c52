#pragma once

#include <optional>

#include "netmix/centrality.hpp"
#include "netmix/classifier.hpp"
#include "netmix/distfit.hpp"
#include "netmix/graph.hpp"

namespace netmix {

struct analysis_options {
  ecc_algorithm algorithm = ecc_algorithm::pruned;
  int threads = 1;                // naive eccentricity only; 0 = hardware
  bool strict_connected = false;  // error out instead of reducing to the LCC
};

struct analysis_result {
  graph g;  // analyzed graph (largest component when the input was disconnected)
  bool lcc_reduced = false;
  std::int64_t component_count = 1;
  eccentricity_profile ecc;
  level_assignment levels;
  edge_classification classification;
  degree_split degrees;
  distribution_report report;
  std::optional<agreement_report> truth_agreement;
};

/// Full pipeline: components -> LCC -> eccentricities -> levels -> edge
/// classes -> distribution fits. Throws disconnected_error when the input
/// is disconnected and strict_connected is set.
analysis_result analyze_graph(graph g, const analysis_options& opts = {});

}  // namespace netmix
