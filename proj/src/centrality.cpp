#include "netmix/centrality.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace netmix {

namespace {

// Fills dist (reset to unreachable first) and returns the number of visited
// nodes; the eccentricity of `source` is the distance of the last visit.
int bfs_into(const graph& g, int source, std::vector<int>& dist,
             std::vector<int>& frontier, std::vector<int>& next, int& ecc) {
  std::fill(dist.begin(), dist.end(), unreachable_distance);
  frontier.clear();
  next.clear();
  dist[source] = 0;
  frontier.push_back(source);
  int visited = 1;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    for (int v : frontier) {
      for (int w : g.neighbors(v)) {
        if (dist[w] == unreachable_distance) {
          dist[w] = depth;
          next.push_back(w);
          ++visited;
        }
      }
    }
    frontier.swap(next);
    next.clear();
  }
  ecc = depth - 1;
  return visited;
}

[[noreturn]] void throw_disconnected(const graph& g, const std::vector<int>& dist,
                                     int source) {
  for (int v = 0; v < g.node_count(); ++v) {
    if (dist[v] == unreachable_distance)
      throw disconnected_error("graph is disconnected: no path between \"" +
                               g.label(source) + "\" and \"" + g.label(v) + "\"");
  }
  throw disconnected_error("graph is disconnected");
}

void ensure_connected(const graph& g) {
  std::vector<int> dist(g.node_count()), frontier, next;
  int ecc = 0;
  if (bfs_into(g, 0, dist, frontier, next, ecc) != g.node_count())
    throw_disconnected(g, dist, 0);
}

std::vector<int> naive_eccentricities(const graph& g, int threads) {
  const int n = g.node_count();
  std::vector<int> ecc(n);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, n);

  if (threads == 1) {
    std::vector<int> dist(n), frontier, next;
    for (int v = 0; v < n; ++v) bfs_into(g, v, dist, frontier, next, ecc[v]);
    return ecc;
  }

  std::atomic<int> cursor{0};
  auto worker = [&]() {
    std::vector<int> dist(n), frontier, next;
    for (;;) {
      int v = cursor.fetch_add(1, std::memory_order_relaxed);
      if (v >= n) break;
      bfs_into(g, v, dist, frontier, next, ecc[v]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return ecc;
}

// Eccentricity bounds in the style of Takes & Kosters: each BFS from a node v
// with exact ecc(v) tightens, for every u, lower(u) to max(ecc(v) - d, d) and
// upper(u) to ecc(v) + d. Nodes whose bounds meet are settled without their
// own BFS. Sweep roots alternate between the largest upper bound (peripheral
// candidates) and the smallest lower bound (central candidates), ties broken
// by degree then id, so the output is deterministic and exactly equal to the
// naive algorithm's.
std::vector<int> pruned_eccentricities(const graph& g) {
  const int n = g.node_count();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> ecc(n, 0);
  std::vector<int> lower(n, 0), upper(n, kInf);
  std::vector<char> settled(n, 0);
  int remaining = n;

  std::vector<int> dist(n), frontier, next;
  bool pick_upper = true;
  while (remaining > 0) {
    int v = -1;
    if (pick_upper) {
      for (int u = 0; u < n; ++u) {
        if (settled[u]) continue;
        if (v == -1 || upper[u] > upper[v] ||
            (upper[u] == upper[v] && g.degree(u) > g.degree(v)))
          v = u;
      }
    } else {
      for (int u = 0; u < n; ++u) {
        if (settled[u]) continue;
        if (v == -1 || lower[u] < lower[v] ||
            (lower[u] == lower[v] && g.degree(u) > g.degree(v)))
          v = u;
      }
    }
    pick_upper = !pick_upper;

    int ecc_v = 0;
    if (bfs_into(g, v, dist, frontier, next, ecc_v) != n)
      throw_disconnected(g, dist, v);
    ecc[v] = ecc_v;
    settled[v] = 1;
    --remaining;

    for (int u = 0; u < n; ++u) {
      if (settled[u]) continue;
      const int d = dist[u];
      lower[u] = std::max({lower[u], ecc_v - d, d});
      if (upper[u] > ecc_v + d) upper[u] = ecc_v + d;
      if (lower[u] == upper[u]) {
        ecc[u] = lower[u];
        settled[u] = 1;
        --remaining;
      }
    }
  }
  return ecc;
}

}  // namespace

std::vector<int> bfs_distances(const graph& g, int source) {
  if (source < 0 || source >= g.node_count())
    throw std::out_of_range("bfs source out of range");
  std::vector<int> dist(g.node_count()), frontier, next;
  int ecc = 0;
  bfs_into(g, source, dist, frontier, next, ecc);
  return dist;
}

eccentricity_profile compute_eccentricities(const graph& g, ecc_algorithm algorithm,
                                            int threads) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");

  eccentricity_profile profile;
  if (algorithm == ecc_algorithm::naive) {
    ensure_connected(g);
    profile.eccentricity = naive_eccentricities(g, threads);
  } else {
    profile.eccentricity = pruned_eccentricities(g);
  }

  profile.radius = *std::min_element(profile.eccentricity.begin(),
                                     profile.eccentricity.end());
  profile.diameter = *std::max_element(profile.eccentricity.begin(),
                                       profile.eccentricity.end());
  for (int v = 0; v < g.node_count(); ++v) {
    if (profile.eccentricity[v] == profile.radius) profile.center.push_back(v);
  }
  return profile;
}

level_assignment assign_levels(const graph& g, const eccentricity_profile& profile) {
  const int n = g.node_count();
  if (static_cast<int>(profile.eccentricity.size()) != n)
    throw std::invalid_argument("profile does not match graph");
  if (profile.center.empty()) throw std::invalid_argument("empty center set");

  level_assignment out;
  out.level.assign(n, 0);
  std::vector<int> frontier, next;
  for (int c : profile.center) {
    out.level[c] = 1;
    frontier.push_back(c);
  }
  int depth = 1;
  while (!frontier.empty()) {
    ++depth;
    for (int v : frontier) {
      for (int w : g.neighbors(v)) {
        if (out.level[w] == 0) {
          out.level[w] = depth;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
    next.clear();
  }
  out.max_level = *std::max_element(out.level.begin(), out.level.end());
  return out;
}

}  // namespace netmix
