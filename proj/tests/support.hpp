#pragma once

// Brute-force reference implementations and deterministic graph builders
// shared by the test binaries. Everything here trades speed for
// obviousness, so the optimized library code is checked against an
// independent baseline.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "netmix/generators.hpp"
#include "netmix/graph.hpp"

namespace testsupport {

struct union_find {
  std::vector<int> parent;

  explicit union_find(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline constexpr int far_away = 1 << 28;

// Cubic all-pairs shortest paths.
inline std::vector<std::vector<int>> all_pairs_distances(const netmix::graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, far_away));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (const auto& [u, v] : g.edges()) {
    dist[u][v] = 1;
    dist[v][u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (dist[i][k] == far_away) continue;
      for (int j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    }
  return dist;
}

// Random spanning tree plus extra edges; connected by construction, node
// count in [2, max_nodes].
inline netmix::graph random_connected_graph(netmix::rng_stream& rng, int max_nodes) {
  const int n = 2 + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(max_nodes - 1)));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.uniform_int(v)), v);
  const int extra = static_cast<int>(rng.uniform_int(n + 1));
  for (int i = 0; i < extra; ++i) {
    int u = static_cast<int>(rng.uniform_int(n));
    int v = static_cast<int>(rng.uniform_int(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end())
      continue;
    edges.emplace_back(u, v);
  }
  return netmix::graph::from_edges(n, std::move(edges));
}

// Random simple graph that may be disconnected and may have isolated nodes.
inline netmix::graph random_graph(netmix::rng_stream& rng, int max_nodes) {
  const int n = 2 + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(max_nodes - 1)));
  const int attempts = static_cast<int>(rng.uniform_int(2 * n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < attempts; ++i) {
    int u = static_cast<int>(rng.uniform_int(n));
    int v = static_cast<int>(rng.uniform_int(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end())
      continue;
    edges.emplace_back(u, v);
  }
  return netmix::graph::from_edges(n, std::move(edges));
}

inline double two_pass_pearson(const std::vector<double>& xs,
                               const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace testsupport
