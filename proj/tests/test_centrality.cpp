#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "netmix/centrality.hpp"
#include "netmix/graph.hpp"
#include "support.hpp"

using namespace netmix;
using testsupport::all_pairs_distances;
using testsupport::random_connected_graph;

namespace {

graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return graph::from_edges(n, std::move(edges));
}

graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return graph::from_edges(n, std::move(edges));
}

graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return graph::from_edges(leaves + 1, std::move(edges));
}

bool profiles_equal(const eccentricity_profile& a, const eccentricity_profile& b) {
  return a.eccentricity == b.eccentricity && a.radius == b.radius &&
         a.diameter == b.diameter && a.center == b.center;
}

}  // namespace

TEST_CASE("bfs distances on a three node path") {
  const graph g = path_graph(3);
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2});
  CHECK(bfs_distances(g, 1) == std::vector<int>{1, 0, 1});
}

TEST_CASE("bfs distances from a star hub") {
  const graph g = star_graph(6);
  const std::vector<int> d = bfs_distances(g, 0);
  CHECK(d[0] == 0);
  for (int v = 1; v <= 6; ++v) CHECK(d[v] == 1);
}

TEST_CASE("bfs marks unreachable nodes and rejects bad sources") {
  const graph g = graph::from_edges(3, {{0, 1}});
  CHECK(bfs_distances(g, 0)[2] == unreachable_distance);
  CHECK_THROWS_AS(bfs_distances(g, 3), std::out_of_range);
  CHECK_THROWS_AS(bfs_distances(g, -1), std::out_of_range);
}

TEST_CASE("bfs rows match the cubic all-pairs baseline") {
  rng_stream rng(8101);
  for (int i = 0; i < 20; ++i) {
    const graph g = random_connected_graph(rng, 100);
    const auto dist = all_pairs_distances(g);
    const int v = static_cast<int>(rng.uniform_int(g.node_count()));
    CHECK(bfs_distances(g, v) == dist[v]);
  }
}

TEST_CASE("eccentricities of a five node path") {
  const graph g = path_graph(5);
  for (const auto algorithm : {ecc_algorithm::naive, ecc_algorithm::pruned}) {
    const eccentricity_profile p = compute_eccentricities(g, algorithm);
    CHECK(p.eccentricity == std::vector<int>{4, 3, 2, 3, 4});
    CHECK(p.radius == 2);
    CHECK(p.diameter == 4);
    CHECK(p.center == std::vector<int>{2});
  }
}

TEST_CASE("every node of a five cycle is central") {
  const graph g = cycle_graph(5);
  for (const auto algorithm : {ecc_algorithm::naive, ecc_algorithm::pruned}) {
    const eccentricity_profile p = compute_eccentricities(g, algorithm);
    CHECK(p.eccentricity == std::vector<int>(5, 2));
    CHECK(p.radius == 2);
    CHECK(p.diameter == 2);
    CHECK(p.center == std::vector<int>{0, 1, 2, 3, 4});
  }
}

TEST_CASE("single node and single edge graphs") {
  const eccentricity_profile one = compute_eccentricities(graph::from_edges(1, {}));
  CHECK(one.eccentricity == std::vector<int>{0});
  CHECK(one.radius == 0);
  CHECK(one.center == std::vector<int>{0});

  const eccentricity_profile two =
      compute_eccentricities(graph::from_edges(2, {{0, 1}}));
  CHECK(two.eccentricity == std::vector<int>{1, 1});
  CHECK(two.center == std::vector<int>{0, 1});
}

TEST_CASE("disconnected graphs are rejected with the offending nodes named") {
  const parse_result r = parse_edge_list(std::string("a b\nc d\n"));
  for (const auto algorithm : {ecc_algorithm::naive, ecc_algorithm::pruned}) {
    CHECK_THROWS_AS(compute_eccentricities(r.g, algorithm), disconnected_error);
    try {
      compute_eccentricities(r.g, algorithm);
    } catch (const disconnected_error& e) {
      const std::string what = e.what();
      CHECK(what.find("a") != std::string::npos);
      CHECK(what.find("c") != std::string::npos);
    }
  }
}

TEST_CASE("empty graphs cannot have eccentricities") {
  CHECK_THROWS_AS(compute_eccentricities(graph::from_edges(0, {})),
                  std::invalid_argument);
}

TEST_CASE("pruned output is identical to naive on 100 random graphs") {
  rng_stream rng(8102);
  for (int i = 0; i < 100; ++i) {
    const graph g = random_connected_graph(rng, 500);
    const eccentricity_profile naive = compute_eccentricities(g, ecc_algorithm::naive);
    const eccentricity_profile pruned = compute_eccentricities(g, ecc_algorithm::pruned);
    REQUIRE(profiles_equal(naive, pruned));
    CHECK(naive.radius <= naive.diameter);
    CHECK(naive.diameter <= 2 * naive.radius);
  }
}

TEST_CASE("eccentricities match the cubic all-pairs baseline") {
  rng_stream rng(8103);
  for (int i = 0; i < 25; ++i) {
    const graph g = random_connected_graph(rng, 120);
    const auto dist = all_pairs_distances(g);
    const eccentricity_profile p = compute_eccentricities(g, ecc_algorithm::pruned);
    for (int v = 0; v < g.node_count(); ++v) {
      const int expected = *std::max_element(dist[v].begin(), dist[v].end());
      REQUIRE(p.eccentricity[v] == expected);
    }
  }
}

TEST_CASE("thread count does not change naive results") {
  rng_stream rng(8104);
  const graph g = random_connected_graph(rng, 300);
  const eccentricity_profile base = compute_eccentricities(g, ecc_algorithm::naive, 1);
  for (const int threads : {2, 4, 8, 0}) {
    const eccentricity_profile p = compute_eccentricities(g, ecc_algorithm::naive, threads);
    CHECK(profiles_equal(base, p));
  }
}

TEST_CASE("levels on a five node path") {
  const graph g = path_graph(5);
  const level_assignment levels = assign_levels(g, compute_eccentricities(g));
  CHECK(levels.level == std::vector<int>{3, 2, 1, 2, 3});
  CHECK(levels.max_level == 3);
}

TEST_CASE("levels on a triangle with a pendant node") {
  // K3 on {a,b,c} plus the edge a-d: a is the unique center.
  const parse_result r = parse_edge_list(std::string("a b\nb c\nc a\na d\n"));
  const eccentricity_profile p = compute_eccentricities(r.g);
  CHECK(p.center == std::vector<int>{0});
  const level_assignment levels = assign_levels(r.g, p);
  CHECK(levels.level == std::vector<int>{1, 2, 2, 2});
  CHECK(levels.max_level == 2);
}

TEST_CASE("a node two hops from the nearest center sits on level three") {
  const graph g = path_graph(5);
  const eccentricity_profile p = compute_eccentricities(g);
  const level_assignment levels = assign_levels(g, p);
  CHECK(bfs_distances(g, p.center[0])[0] == 2);
  CHECK(levels.level[0] == 3);
}

TEST_CASE("level properties hold on random graphs") {
  rng_stream rng(8105);
  for (int i = 0; i < 40; ++i) {
    const graph g = random_connected_graph(rng, 200);
    const eccentricity_profile p = compute_eccentricities(g);
    const level_assignment levels = assign_levels(g, p);

    int max_seen = 0;
    for (int v = 0; v < g.node_count(); ++v) {
      const bool central =
          std::binary_search(p.center.begin(), p.center.end(), v);
      CHECK((levels.level[v] == 1) == central);
      CHECK(levels.level[v] >= 1);
      max_seen = std::max(max_seen, levels.level[v]);
    }
    CHECK(levels.max_level == max_seen);

    for (const auto& [u, v] : g.edges())
      CHECK(std::abs(levels.level[u] - levels.level[v]) <= 1);
  }
}
