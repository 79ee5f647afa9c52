#include "netmix/classifier.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace netmix {

namespace {

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

edge_classification classify_edges(const graph& g, const level_assignment& levels) {
  if (static_cast<int>(levels.level.size()) != g.node_count())
    throw std::invalid_argument("level assignment does not match graph");

  edge_classification out;
  out.label.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    const int gap = std::abs(levels.level[u] - levels.level[v]);
    if (gap == 0) {
      out.label.push_back(edge_type::p2p);
      ++out.p2p_count;
    } else if (gap == 1) {
      out.label.push_back(edge_type::p2c);
      ++out.p2c_count;
    } else {
      throw std::invalid_argument("adjacent nodes more than one level apart");
    }
  }
  return out;
}

void write_classification_tsv(const graph& g, const edge_classification& c,
                              std::ostream& out) {
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    out << g.label(u) << '\t' << g.label(v) << '\t'
        << (c.label[i] == edge_type::p2c ? "P2C" : "P2P") << '\n';
  }
}

truth_table parse_truth_table(std::istream& in) {
  truth_table table;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string u, v, type, extra;
    if (!(ss >> u)) continue;  // blank line
    if (u.starts_with('#')) continue;
    if (!(ss >> v >> type) || (ss >> extra))
      throw parse_error("expected \"u v TYPE\", got: \"" + line + "\"", line_no);
    edge_type t;
    if (type == "P2C")
      t = edge_type::p2c;
    else if (type == "P2P")
      t = edge_type::p2p;
    else
      throw parse_error("invalid edge type token \"" + type + "\"", line_no);
    table.rows.push_back({std::move(u), std::move(v), t});
  }
  return table;
}

truth_table load_truth_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_truth_table(in);
}

agreement_report agreement(const graph& g, const edge_classification& c,
                           const truth_table& truth) {
  if (c.label.size() != g.edges().size())
    throw std::invalid_argument("classification does not match graph");

  // Collapse truth rows onto canonical graph edges; the last row wins.
  std::unordered_map<std::uint64_t, edge_type> truth_types;
  std::int64_t unmatched = 0;
  for (const auto& row : truth.rows) {
    auto u = g.index_of(row.u);
    auto v = g.index_of(row.v);
    if (!u || !v || !g.has_edge(*u, *v)) {
      ++unmatched;
      continue;
    }
    truth_types[edge_key(*u, *v)] = row.type;
  }

  agreement_report report;
  report.unmatched_truth = unmatched;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    auto it = truth_types.find(edge_key(u, v));
    if (it == truth_types.end()) {
      ++report.missing_in_truth;
      continue;
    }
    ++report.compared;
    if (it->second == c.label[i]) ++report.matched;
  }
  if (report.compared > 0)
    report.agreement_fraction =
        static_cast<double>(report.matched) / static_cast<double>(report.compared);
  return report;
}

degree_split split_degree_sequences(const graph& g, const edge_classification& c) {
  if (c.label.size() != g.edges().size())
    throw std::invalid_argument("classification does not match graph");

  degree_split split;
  split.total.assign(g.node_count(), 0);
  split.p2c.assign(g.node_count(), 0);
  split.p2p.assign(g.node_count(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    ++split.total[u];
    ++split.total[v];
    auto& cls = c.label[i] == edge_type::p2c ? split.p2c : split.p2p;
    ++cls[u];
    ++cls[v];
  }
  return split;
}

}  // namespace netmix
