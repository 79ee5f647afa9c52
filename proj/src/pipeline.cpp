#include "netmix/pipeline.hpp"

#include <utility>

namespace netmix {

analysis_result analyze_graph(graph g, const analysis_options& opts) {
  analysis_result res;

  const connectivity_report comps = connected_components(g);
  res.component_count = static_cast<std::int64_t>(comps.component_sizes.size());
  if (res.component_count > 1) {
    if (opts.strict_connected) {
      int other = 0;
      while (comps.component_id[other] == comps.component_id[0]) ++other;
      throw disconnected_error("graph is disconnected: no path between \"" +
                               g.label(0) + "\" and \"" + g.label(other) + "\"");
    }
    g = largest_component(g, comps);
    res.lcc_reduced = true;
  }

  res.g = std::move(g);
  res.ecc = compute_eccentricities(res.g, opts.algorithm, opts.threads);
  res.levels = assign_levels(res.g, res.ecc);
  res.classification = classify_edges(res.g, res.levels);
  res.degrees = split_degree_sequences(res.g, res.classification);
  res.report = fit_report(res.g, res.classification);
  return res;
}

}  // namespace netmix
