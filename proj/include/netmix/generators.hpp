#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "netmix/graph.hpp"

namespace netmix {

/// Seeded uniform random source used by every generator. The engine is
/// std::mt19937_64, whose state transition is fixed by the C++ standard,
/// and the bounded draws below are implemented here, so a seed produces the
/// same stream on every platform. Stream id: "mt19937_64/v1".
class rng_stream {
 public:
  static constexpr std::string_view algorithm_id = "mt19937_64/v1";

  explicit rng_stream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, bound), bound > 0. Rejects the biased tail of the
  /// 64-bit word, so the draw is exactly uniform.
  std::uint64_t uniform_int(std::uint64_t bound);

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct ba_config {
  int m0 = 2;          // initial nodes, connected in a path
  int m = 1;           // edges per new node (capped at current node count)
  std::int64_t t = 1;  // node-addition steps
  std::uint64_t seed = 0;
};

struct eba_config {
  double p = 0.0;      // probability of a link-addition step
  double q = 0.0;      // probability of a rewiring step; p + q < 1
  int m = 1;           // links per event
  int m0 = 2;          // initial isolated nodes
  std::int64_t t = 1;  // event steps
  std::uint64_t seed = 0;
};

struct generation_report {
  std::string model;
  std::uint64_t seed = 0;
  std::string rng_algorithm{rng_stream::algorithm_id};
  std::int64_t nodes = 0;
  std::int64_t edges = 0;
  std::int64_t isolated_nodes = 0;
  std::int64_t skipped_draws = 0;  // draws abandoned after 64 rejections
  // step counts; only the eba model uses the first two
  std::int64_t link_steps = 0;
  std::int64_t rewire_steps = 0;
  std::int64_t node_steps = 0;
  std::int64_t rewired_edges = 0;
};

struct generation_result {
  graph g;
  generation_report report;
};

/// Growth with degree-proportional attachment: m0 path nodes, then t nodes
/// each wired to min(m, existing) distinct targets drawn uniformly from the
/// running edge-endpoint list. Deterministic for a fixed seed.
generation_result generate_ba(const ba_config& cfg);

/// Growth with link addition (prob p), rewiring (prob q), and node addition
/// (otherwise), all using the (k+1) preferential kernel so isolated nodes
/// stay selectable. Deterministic for a fixed seed.
generation_result generate_eba(const eba_config& cfg);

}  // namespace netmix
