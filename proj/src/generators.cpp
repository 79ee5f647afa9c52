#include "netmix/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace netmix {

std::uint64_t rng_stream::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_int: bound must be positive");
  // Reject the biased tail: 2^64 mod bound values at the bottom of the word.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

namespace {

constexpr int retry_limit = 64;

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

// Mutable simple-graph state: flat edge list for O(1) endpoint sampling,
// hash index for O(1) membership tests and swap-pop deletion.
struct growth_state {
  std::vector<std::pair<int, int>> edge_list;
  std::unordered_map<std::uint64_t, std::size_t> edge_index;
  std::vector<std::vector<int>> adj;
  int n = 0;

  explicit growth_state(int initial_nodes)
      : adj(static_cast<std::size_t>(initial_nodes)), n(initial_nodes) {}

  bool has_edge(int u, int v) const {
    return edge_index.find(edge_key(u, v)) != edge_index.end();
  }

  void add_edge(int u, int v) {
    edge_index.emplace(edge_key(u, v), edge_list.size());
    edge_list.emplace_back(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  void remove_edge(int u, int v) {
    const auto it = edge_index.find(edge_key(u, v));
    const std::size_t pos = it->second;
    edge_index.erase(it);
    if (pos + 1 != edge_list.size()) {
      edge_list[pos] = edge_list.back();
      edge_index[edge_key(edge_list[pos].first, edge_list[pos].second)] = pos;
    }
    edge_list.pop_back();
    drop_neighbor(u, v);
    drop_neighbor(v, u);
  }

  void drop_neighbor(int u, int v) {
    auto& nb = adj[u];
    *std::find(nb.begin(), nb.end(), v) = nb.back();
    nb.pop_back();
  }

  int add_node() {
    adj.emplace_back();
    return n++;
  }

  // One draw with the (k+1) kernel: every node once, plus one entry per
  // edge incidence, so node weight = degree + 1.
  int preferential_pick(rng_stream& rng) const {
    const std::uint64_t total =
        static_cast<std::uint64_t>(n) + 2 * edge_list.size();
    const std::uint64_t r = rng.uniform_int(total);
    if (r < static_cast<std::uint64_t>(n)) return static_cast<int>(r);
    const std::uint64_t inc = r - static_cast<std::uint64_t>(n);
    const auto& edge = edge_list[inc / 2];
    return (inc % 2 == 0) ? edge.first : edge.second;
  }

  std::int64_t isolated_count() const {
    return std::count_if(adj.begin(), adj.end(),
                         [](const std::vector<int>& nb) { return nb.empty(); });
  }
};

void check_node_budget(std::int64_t m0, std::int64_t t) {
  if (m0 + t > std::numeric_limits<int>::max())
    throw std::invalid_argument("final node count exceeds the id range");
}

}  // namespace

generation_result generate_ba(const ba_config& cfg) {
  if (cfg.m0 < 2) throw std::invalid_argument("ba: m0 must be >= 2");
  if (cfg.m < 1) throw std::invalid_argument("ba: m must be >= 1");
  if (cfg.t < 1) throw std::invalid_argument("ba: t must be >= 1");
  check_node_budget(cfg.m0, cfg.t);

  rng_stream rng(cfg.seed);
  generation_report rep;
  rep.model = "ba";
  rep.seed = cfg.seed;
  rep.node_steps = cfg.t;

  std::vector<std::pair<int, int>> edges;
  std::vector<int> endpoints;  // degree-proportional sampling pool
  edges.reserve(static_cast<std::size_t>(cfg.m0 - 1 + cfg.t * cfg.m));
  endpoints.reserve(2 * edges.capacity());

  // Path start so every initial node has nonzero degree.
  for (int i = 0; i + 1 < cfg.m0; ++i) {
    edges.emplace_back(i, i + 1);
    endpoints.push_back(i);
    endpoints.push_back(i + 1);
  }

  std::vector<int> chosen;
  for (std::int64_t step = 0; step < cfg.t; ++step) {
    const int existing = static_cast<int>(cfg.m0 + step);
    const int v = existing;
    chosen.clear();
    if (cfg.m >= existing) {
      // Fewer nodes than requested links: attach to all of them.
      for (int u = 0; u < existing; ++u) chosen.push_back(u);
    } else {
      for (int link = 0; link < cfg.m; ++link) {
        bool placed = false;
        for (int attempt = 0; attempt < retry_limit && !placed; ++attempt) {
          const int u = endpoints[rng.uniform_int(endpoints.size())];
          if (std::find(chosen.begin(), chosen.end(), u) != chosen.end()) continue;
          chosen.push_back(u);
          placed = true;
        }
        if (!placed) ++rep.skipped_draws;
      }
    }
    const std::size_t edges_before = edges.size();
    for (int u : chosen) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
    if (edges.size() < edges_before)
      throw std::logic_error("ba: node step removed edges");
  }

  const int final_nodes = static_cast<int>(cfg.m0 + cfg.t);
  generation_result result{graph::from_edges(final_nodes, std::move(edges)), rep};
  result.report.nodes = result.g.node_count();
  result.report.edges = result.g.edge_count();
  for (int u = 0; u < final_nodes; ++u)
    if (result.g.degree(u) == 0) ++result.report.isolated_nodes;
  return result;
}

generation_result generate_eba(const eba_config& cfg) {
  if (!(cfg.p >= 0.0) || !(cfg.q >= 0.0) || !(cfg.p + cfg.q < 1.0))
    throw std::invalid_argument("eba: need p >= 0, q >= 0, and p + q < 1");
  if (cfg.m < 1) throw std::invalid_argument("eba: m must be >= 1");
  if (cfg.m0 < 2) throw std::invalid_argument("eba: m0 must be >= 2");
  if (cfg.t < 1) throw std::invalid_argument("eba: t must be >= 1");
  check_node_budget(cfg.m0, cfg.t);

  rng_stream rng(cfg.seed);
  generation_report rep;
  rep.model = "eba";
  rep.seed = cfg.seed;

  growth_state st(cfg.m0);
  std::vector<int> chosen;

  for (std::int64_t step = 0; step < cfg.t; ++step) {
    const std::size_t edges_before = st.edge_list.size();
    const double x = rng.uniform_real();

    if (x < cfg.p) {
      ++rep.link_steps;
      for (int link = 0; link < cfg.m; ++link) {
        bool placed = false;
        for (int attempt = 0; attempt < retry_limit && !placed; ++attempt) {
          const int u = static_cast<int>(rng.uniform_int(st.n));
          const int v = st.preferential_pick(rng);
          if (u == v || st.has_edge(u, v)) continue;
          st.add_edge(u, v);
          placed = true;
        }
        if (!placed) ++rep.skipped_draws;
      }
      if (st.edge_list.size() < edges_before)
        throw std::logic_error("eba: link step removed edges");

    } else if (x < cfg.p + cfg.q) {
      ++rep.rewire_steps;
      for (int link = 0; link < cfg.m; ++link) {
        if (st.edge_list.empty()) {
          ++rep.skipped_draws;
          continue;
        }
        int i = -1;
        for (int attempt = 0; attempt < retry_limit && i < 0; ++attempt) {
          const int cand = static_cast<int>(rng.uniform_int(st.n));
          if (!st.adj[cand].empty()) i = cand;
        }
        if (i < 0) {
          ++rep.skipped_draws;
          continue;
        }
        const int j = st.adj[i][rng.uniform_int(st.adj[i].size())];
        st.remove_edge(i, j);
        bool placed = false;
        for (int attempt = 0; attempt < retry_limit && !placed; ++attempt) {
          const int j2 = st.preferential_pick(rng);
          if (j2 == i || st.has_edge(i, j2)) continue;
          st.add_edge(i, j2);
          placed = true;
        }
        if (placed) {
          ++rep.rewired_edges;
        } else {
          st.add_edge(i, j);  // put the deleted edge back; the step stays neutral
          ++rep.skipped_draws;
        }
      }
      if (st.edge_list.size() != edges_before)
        throw std::logic_error("eba: rewiring changed the edge count");

    } else {
      ++rep.node_steps;
      // Targets come from the pre-step state, so the new node is never its
      // own target; links are capped by the number of available targets.
      const int links = static_cast<int>(
          std::min<std::int64_t>(cfg.m, static_cast<std::int64_t>(st.n)));
      chosen.clear();
      for (int link = 0; link < links; ++link) {
        bool placed = false;
        for (int attempt = 0; attempt < retry_limit && !placed; ++attempt) {
          const int u = st.preferential_pick(rng);
          if (std::find(chosen.begin(), chosen.end(), u) != chosen.end()) continue;
          chosen.push_back(u);
          placed = true;
        }
        if (!placed) ++rep.skipped_draws;
      }
      const int v = st.add_node();
      for (int u : chosen) st.add_edge(u, v);
      if (st.edge_list.size() < edges_before)
        throw std::logic_error("eba: node step removed edges");
    }
  }

  rep.nodes = st.n;
  rep.edges = static_cast<std::int64_t>(st.edge_list.size());
  rep.isolated_nodes = st.isolated_count();
  return {graph::from_edges(st.n, std::move(st.edge_list)), rep};
}

}  // namespace netmix
