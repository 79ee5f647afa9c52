#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netmix/errors.hpp"

namespace netmix {

/// Immutable simple undirected graph. Nodes carry dense ids [0, n) plus an
/// external string label; edges are stored once in canonical (u < v) order,
/// sorted lexicographically. Safe for concurrent reads once built.
class graph {
 public:
  graph() = default;

  /// Builds a graph from already-normalized edges. Edges may arrive in any
  /// orientation and order; they are canonicalized and sorted here. Throws
  /// std::invalid_argument on self-loops, duplicates, or out-of-range ids.
  /// When `labels` is empty, nodes are labeled by their decimal id.
  static graph from_edges(int node_count, std::vector<std::pair<int, int>> edges,
                          std::vector<std::string> labels = {});

  int node_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
  }
  int degree(int v) const {
    return static_cast<int>(adj_offset_[v + 1] - adj_offset_[v]);
  }
  bool has_edge(int u, int v) const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::int64_t> adj_offset_;
  std::vector<int> adj_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

struct normalization_summary {
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicates_collapsed = 0;
};

struct parse_options {
  std::string comment_prefix = "#";
  std::optional<char> delimiter;  // default: any run of whitespace
};

struct parse_result {
  graph g;
  normalization_summary normalization;
};

/// Parses edge-list text: one edge per line, two tokens. Comment lines and
/// blank lines are skipped. Self-loops are dropped and duplicate edges
/// collapsed; both are counted in the normalization summary. Dense ids are
/// assigned in first-appearance order. Throws parse_error on a line with a
/// token count other than two, and on input with no edge lines at all.
parse_result parse_edge_list(std::istream& in, const parse_options& opts = {});
parse_result parse_edge_list(const std::string& text, const parse_options& opts = {});
parse_result load_edge_list(const std::filesystem::path& path,
                            const parse_options& opts = {});

/// One line per canonical edge: "<label_u> <label_v>". Re-parsing yields the
/// same canonical edge set (isolated nodes are not representable).
void write_edge_list(const graph& g, std::ostream& out);

struct connectivity_report {
  std::vector<int> component_id;            // per node
  std::vector<std::int64_t> component_sizes;
  int lcc_index = -1;  // largest component; ties go to the smallest id
};

connectivity_report connected_components(const graph& g);

/// Induced subgraph on the largest component of `g`, reindexed densely in
/// ascending order of the old ids, external labels preserved.
graph largest_component(const graph& g, const connectivity_report& r);

}  // namespace netmix
