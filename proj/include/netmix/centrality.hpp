#pragma once

#include <vector>

#include "netmix/graph.hpp"

namespace netmix {

/// Marker distance for nodes unreachable from the BFS source.
inline constexpr int unreachable_distance = -1;

/// Unweighted shortest-path distances (hops) from `source` to every node.
/// Throws std::out_of_range when source is not a valid node id.
std::vector<int> bfs_distances(const graph& g, int source);

enum class ecc_algorithm {
  naive,   // one BFS per node
  pruned,  // eccentricity bounds, skips converged nodes; identical output
};

struct eccentricity_profile {
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  std::vector<int> center;  // nodes at minimum eccentricity, ascending
};

/// Exact eccentricities of a connected graph. `threads` applies to the
/// naive algorithm only (0 = hardware concurrency); results are identical
/// for any thread count and for both algorithms. Throws disconnected_error
/// naming two unreachable nodes when g is not connected.
eccentricity_profile compute_eccentricities(const graph& g,
                                            ecc_algorithm algorithm = ecc_algorithm::pruned,
                                            int threads = 1);

struct level_assignment {
  std::vector<int> level;  // center nodes are level 1
  int max_level = 0;
};

/// Level of a node = 1 + hop distance to the nearest center node, via
/// multi-source BFS from the center set.
level_assignment assign_levels(const graph& g, const eccentricity_profile& profile);

}  // namespace netmix
