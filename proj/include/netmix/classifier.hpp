#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netmix/centrality.hpp"
#include "netmix/graph.hpp"

namespace netmix {

enum class edge_type : std::uint8_t {
  p2c,  // endpoints on adjacent levels: hierarchical
  p2p,  // endpoints on the same level: peer
};

struct edge_classification {
  std::vector<edge_type> label;  // aligned with graph::edges()
  std::int64_t p2c_count = 0;
  std::int64_t p2p_count = 0;
};

/// Labels every edge from its endpoint levels. Levels of adjacent nodes can
/// differ by at most one, so the p2c/p2p dichotomy is total.
edge_classification classify_edges(const graph& g, const level_assignment& levels);

/// Per-edge TSV rows "<label_u>\t<label_v>\t<P2C|P2P>", graph edge order.
void write_classification_tsv(const graph& g, const edge_classification& c,
                              std::ostream& out);

struct truth_table {
  struct row {
    std::string u, v;
    edge_type type;
  };
  std::vector<row> rows;
};

/// Ground-truth edge labels: "<u> <v> <P2C|P2P>" per line, '#' comments and
/// blank lines ignored. Throws parse_error on malformed rows or type tokens.
truth_table parse_truth_table(std::istream& in);
truth_table load_truth_table(const std::filesystem::path& path);

struct agreement_report {
  std::int64_t matched = 0;           // compared edges with equal type
  std::int64_t compared = 0;          // graph edges present in the truth table
  std::int64_t missing_in_truth = 0;  // graph edges without a truth row
  std::int64_t unmatched_truth = 0;   // truth edges absent from the graph
  double agreement_fraction = 0.0;    // matched / compared (0 when compared = 0)
};

/// Orientation-insensitive comparison against external labels. Truth rows
/// that reference unknown nodes or absent edges are counted, not errors;
/// duplicate truth rows for one edge collapse to the last occurrence.
agreement_report agreement(const graph& g, const edge_classification& c,
                           const truth_table& truth);

struct degree_split {
  std::vector<int> total;
  std::vector<int> p2c;
  std::vector<int> p2p;
};

/// Per-node decomposition of degree into incident p2c and p2p edges.
degree_split split_degree_sequences(const graph& g, const edge_classification& c);

}  // namespace netmix
