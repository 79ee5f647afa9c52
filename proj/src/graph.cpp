#include "netmix/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace netmix {

graph graph::from_edges(int node_count, std::vector<std::pair<int, int>> edges,
                        std::vector<std::string> labels) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  if (!labels.empty() && static_cast<int>(labels.size()) != node_count)
    throw std::invalid_argument("label count does not match node count");

  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge not allowed");

  graph g;
  g.n_ = node_count;
  g.edges_ = std::move(edges);

  if (labels.empty()) {
    labels.reserve(node_count);
    for (int v = 0; v < node_count; ++v) labels.push_back(std::to_string(v));
  }
  g.labels_ = std::move(labels);
  g.index_.reserve(g.labels_.size());
  for (int v = 0; v < node_count; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second)
      throw std::invalid_argument("duplicate node label: " + g.labels_[v]);
  }

  std::vector<int> deg(node_count, 0);
  for (const auto& [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.adj_offset_.assign(node_count + 1, 0);
  for (int v = 0; v < node_count; ++v) g.adj_offset_[v + 1] = g.adj_offset_[v] + deg[v];
  g.adj_.resize(g.adj_offset_[node_count]);
  std::vector<std::int64_t> cursor(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < node_count; ++v)
    std::sort(g.adj_.begin() + g.adj_offset_[v], g.adj_.begin() + g.adj_offset_[v + 1]);
  return g;
}

bool graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> graph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool split_two_tokens(const std::string& line, const parse_options& opts,
                      std::string& a, std::string& b) {
  if (opts.delimiter) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : line) {
      if (ch == *opts.delimiter) {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (tokens.size() != 2) return false;
    a = std::move(tokens[0]);
    b = std::move(tokens[1]);
    return true;
  }
  std::istringstream ss(line);
  std::string extra;
  if (!(ss >> a >> b)) return false;
  if (ss >> extra) return false;
  return true;
}

bool blank_line(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

parse_result parse_edge_list(std::istream& in, const parse_options& opts) {
  std::vector<std::pair<int, int>> raw_edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  normalization_summary summary;

  auto intern = [&](std::string&& label) {
    auto [it, inserted] = index.emplace(std::move(label), static_cast<int>(labels.size()));
    if (inserted) labels.push_back(it->first);
    return it->second;
  };

  std::string line;
  std::int64_t line_no = 0;
  bool saw_edge_line = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_line(line)) continue;
    std::size_t first = line.find_first_not_of(" \t");
    if (!opts.comment_prefix.empty() &&
        line.compare(first, opts.comment_prefix.size(), opts.comment_prefix) == 0)
      continue;

    std::string a, b;
    if (!split_two_tokens(line, opts, a, b))
      throw parse_error("expected two tokens, got: \"" + line + "\"", line_no);
    saw_edge_line = true;
    int u = intern(std::move(a));
    int v = intern(std::move(b));
    if (u == v) {
      ++summary.self_loops_dropped;
      continue;
    }
    raw_edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!saw_edge_line) throw parse_error("input contains no edges", 0);

  std::sort(raw_edges.begin(), raw_edges.end());
  auto last = std::unique(raw_edges.begin(), raw_edges.end());
  summary.duplicates_collapsed = raw_edges.end() - last;
  raw_edges.erase(last, raw_edges.end());

  parse_result result;
  const int node_count = static_cast<int>(labels.size());
  result.g = graph::from_edges(node_count, std::move(raw_edges), std::move(labels));
  result.normalization = summary;
  return result;
}

parse_result parse_edge_list(const std::string& text, const parse_options& opts) {
  std::istringstream in(text);
  return parse_edge_list(in, opts);
}

parse_result load_edge_list(const std::filesystem::path& path, const parse_options& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in, opts);
}

void write_edge_list(const graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges())
    out << g.label(u) << ' ' << g.label(v) << '\n';
}

connectivity_report connected_components(const graph& g) {
  const int n = g.node_count();
  connectivity_report report;
  report.component_id.assign(n, -1);

  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (report.component_id[root] != -1) continue;
    const int id = static_cast<int>(report.component_sizes.size());
    std::int64_t size = 0;
    report.component_id[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : g.neighbors(v)) {
        if (report.component_id[w] == -1) {
          report.component_id[w] = id;
          stack.push_back(w);
        }
      }
    }
    report.component_sizes.push_back(size);
  }

  for (std::size_t id = 0; id < report.component_sizes.size(); ++id) {
    if (report.lcc_index < 0 ||
        report.component_sizes[id] > report.component_sizes[report.lcc_index])
      report.lcc_index = static_cast<int>(id);
  }
  return report;
}

graph largest_component(const graph& g, const connectivity_report& r) {
  if (static_cast<int>(r.component_id.size()) != g.node_count())
    throw std::invalid_argument("connectivity report does not match graph");
  if (r.lcc_index < 0) return graph::from_edges(0, {});

  std::vector<int> remap(g.node_count(), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < g.node_count(); ++v) {
    if (r.component_id[v] == r.lcc_index) {
      remap[v] = static_cast<int>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (remap[u] != -1 && remap[v] != -1) edges.emplace_back(remap[u], remap[v]);
  }
  const int node_count = static_cast<int>(labels.size());
  return graph::from_edges(node_count, std::move(edges), std::move(labels));
}

}  // namespace netmix
