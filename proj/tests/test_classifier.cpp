#include <doctest.h>

#include <numeric>
#include <sstream>
#include <string>

#include "netmix/centrality.hpp"
#include "netmix/classifier.hpp"
#include "netmix/graph.hpp"
#include "support.hpp"

using namespace netmix;
using testsupport::random_connected_graph;

namespace {

edge_classification classify(const graph& g) {
  return classify_edges(g, assign_levels(g, compute_eccentricities(g)));
}

truth_table truth_from(const std::string& text) {
  std::istringstream in(text);
  return parse_truth_table(in);
}

std::string tsv_of(const graph& g, const edge_classification& c) {
  std::ostringstream out;
  write_classification_tsv(g, c, out);
  return out.str();
}

}  // namespace

TEST_CASE("all edges of a five cycle are peer links") {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) edges.emplace_back(v, (v + 1) % 5);
  const graph g = graph::from_edges(5, std::move(edges));
  const edge_classification c = classify(g);
  CHECK(c.p2p_count == 5);
  CHECK(c.p2c_count == 0);
  for (const edge_type t : c.label) CHECK(t == edge_type::p2p);
}

TEST_CASE("all edges of a star are provider links") {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= 6; ++v) edges.emplace_back(0, v);
  const graph g = graph::from_edges(7, std::move(edges));
  const edge_classification c = classify(g);
  CHECK(c.p2c_count == 6);
  CHECK(c.p2p_count == 0);

  const degree_split split = split_degree_sequences(g, c);
  CHECK(split.total[0] == 6);
  CHECK(split.p2c[0] == 6);
  CHECK(split.p2p[0] == 0);
  for (int v = 1; v <= 6; ++v) {
    CHECK(split.total[v] == 1);
    CHECK(split.p2c[v] == 1);
  }
}

TEST_CASE("triangle with pendant mixes both classes") {
  const parse_result r = parse_edge_list(std::string("a b\nb c\nc a\na d\n"));
  const edge_classification c = classify(r.g);
  // Center {a}; b,c,d sit on level 2, so b-c is the only peer edge.
  CHECK(c.p2c_count == 3);
  CHECK(c.p2p_count == 1);

  const degree_split split = split_degree_sequences(r.g, c);
  const int a = r.g.index_of("a").value();
  const int b = r.g.index_of("b").value();
  CHECK(split.total[a] == 3);
  CHECK(split.p2c[a] == 3);
  CHECK(split.p2p[a] == 0);
  CHECK(split.total[b] == 2);
  CHECK(split.p2c[b] == 1);
  CHECK(split.p2p[b] == 1);
}

TEST_CASE("level vector must cover every node") {
  const graph g = graph::from_edges(3, {{0, 1}, {1, 2}});
  level_assignment bad;
  bad.level = {1, 2};
  bad.max_level = 2;
  CHECK_THROWS_AS(classify_edges(g, bad), std::invalid_argument);

  level_assignment gapped;
  gapped.level = {1, 3, 1};
  gapped.max_level = 3;
  CHECK_THROWS_AS(classify_edges(g, gapped), std::invalid_argument);
}

TEST_CASE("class counts and degree splits are consistent on random graphs") {
  rng_stream rng(9001);
  for (int i = 0; i < 30; ++i) {
    const graph g = random_connected_graph(rng, 150);
    const level_assignment levels = assign_levels(g, compute_eccentricities(g));
    const edge_classification c = classify_edges(g, levels);
    CHECK(c.p2c_count + c.p2p_count == g.edge_count());

    const degree_split split = split_degree_sequences(g, c);
    const auto sum = [](const std::vector<int>& d) {
      return std::accumulate(d.begin(), d.end(), 0LL);
    };
    CHECK(sum(split.p2c) == 2LL * c.p2c_count);
    CHECK(sum(split.p2p) == 2LL * c.p2p_count);
    CHECK(sum(split.total) == 2LL * g.edge_count());
    for (int v = 0; v < g.node_count(); ++v)
      CHECK(split.total[v] == split.p2c[v] + split.p2p[v]);

    // A non-central node always reaches a node one level closer, so it
    // carries at least one provider edge.
    for (int v = 0; v < g.node_count(); ++v)
      if (levels.level[v] > 1) CHECK(split.p2c[v] >= 1);
  }
}

TEST_CASE("classification is deterministic") {
  rng_stream rng(9002);
  const graph g = random_connected_graph(rng, 200);
  const edge_classification a = classify(g);
  const edge_classification b = classify(g);
  CHECK(a.label == b.label);
  CHECK(a.p2c_count == b.p2c_count);
  CHECK(a.p2p_count == b.p2p_count);
}

TEST_CASE("classification export is stable") {
  const parse_result r = parse_edge_list(std::string("a b\nb c\nc a\na d\n"));
  CHECK(tsv_of(r.g, classify(r.g)) ==
        "a\tb\tP2C\n"
        "a\tc\tP2C\n"
        "a\td\tP2C\n"
        "b\tc\tP2P\n");
}

TEST_CASE("truth tables accept comments and both orientations") {
  const truth_table t = truth_from(
      "# reference labels\n"
      "\n"
      "a b P2C\n"
      "c b P2P\n");
  const parse_result r = parse_edge_list(std::string("a b\nb c\n"));
  const edge_classification c{{edge_type::p2c, edge_type::p2p}, 1, 1};
  const agreement_report rep = agreement(r.g, c, t);
  CHECK(rep.compared == 2);
  CHECK(rep.matched == 2);
  CHECK(rep.agreement_fraction == doctest::Approx(1.0));
}

TEST_CASE("truth table rejects malformed rows") {
  CHECK_THROWS_AS(truth_from("a b p2x\n"), parse_error);
  CHECK_THROWS_AS(truth_from("a b\n"), parse_error);
  try {
    truth_from("a b P2C\nc d WRONG\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("agreement counts matches and mismatches") {
  const parse_result r = parse_edge_list(std::string("a b\nb c\nc a\na d\n"));
  const edge_classification c = classify(r.g);

  const std::string tsv = tsv_of(r.g, c);
  std::string flipped;
  std::istringstream lines(tsv);
  std::string line;
  while (std::getline(lines, line)) {
    const auto pos = line.rfind('\t');
    flipped += line.substr(0, pos + 1);
    flipped += line.substr(pos + 1) == "P2C" ? "P2P" : "P2C";
    flipped += "\n";
  }

  // The export doubles as a truth table for the same graph.
  const agreement_report exact = agreement(r.g, c, truth_from(tsv));
  CHECK(exact.compared == 4);
  CHECK(exact.matched == 4);
  CHECK(exact.agreement_fraction == doctest::Approx(1.0));

  const agreement_report wrong = agreement(r.g, c, truth_from(flipped));
  CHECK(wrong.compared == 4);
  CHECK(wrong.matched == 0);
  CHECK(wrong.agreement_fraction == doctest::Approx(0.0));
}

TEST_CASE("agreement handles partial and stale truth rows") {
  const parse_result r = parse_edge_list(std::string("a b\nb c\n"));
  const edge_classification c = classify(r.g);

  const truth_table partial = truth_from(
      "a b P2C\n"
      "x y P2P\n"   // labels absent from the graph
      "a c P2C\n");  // labels present, but no such edge
  const agreement_report rep = agreement(r.g, c, partial);
  CHECK(rep.compared == 1);
  CHECK(rep.missing_in_truth == 1);
  CHECK(rep.unmatched_truth == 2);
}

TEST_CASE("duplicate truth rows keep the last label") {
  const parse_result r = parse_edge_list(std::string("a b\n"));
  const edge_classification c{{edge_type::p2c}, 1, 0};
  const agreement_report rep = agreement(r.g, c, truth_from("a b P2P\nb a P2C\n"));
  CHECK(rep.compared == 1);
  CHECK(rep.matched == 1);
}

TEST_CASE("empty truth table compares nothing") {
  const parse_result r = parse_edge_list(std::string("a b\n"));
  const edge_classification c{{edge_type::p2c}, 1, 0};
  const agreement_report rep = agreement(r.g, c, truth_table{});
  CHECK(rep.compared == 0);
  CHECK(rep.matched == 0);
  CHECK(rep.missing_in_truth == 1);
  CHECK(rep.agreement_fraction == doctest::Approx(0.0));
}
