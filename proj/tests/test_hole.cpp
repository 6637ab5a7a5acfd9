#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "corient/error.hpp"
#include "corient/hole.hpp"
#include "corient/preprocess.hpp"
#include "graphs.hpp"

using namespace corient;
namespace t = corient::testing;

namespace {

LabeledMultigraph multigraph_of(const UndirectedGraph& g) {
  StepCounter steps;
  return reduce(g, steps).multigraph;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

/// Independent structural check: consecutive membership, simple cycle,
/// alignment flags and chordlessness.
void check_hole(const LabeledMultigraph& m, const Hole& hole) {
  const std::size_t h = hole.size();
  REQUIRE(h >= 1);
  REQUIRE(hole.nodes.size() == h);
  REQUIRE(hole.aligned.size() == h);
  std::set<MNode> nodes(hole.nodes.begin(), hole.nodes.end());
  std::set<MEdge> edges(hole.edges.begin(), hole.edges.end());
  CHECK(nodes.size() == h);
  CHECK(edges.size() == h);
  for (std::size_t j = 0; j < h; ++j) {
    const MultiEdge& e = m.edge(hole.edges[j]);
    const MNode x = hole.nodes[j];
    const MNode y = hole.nodes[(j + 1) % h];
    CHECK(((e.a == x && e.b == y) || (e.a == y && e.b == x)));
    CHECK((hole.aligned[j] != 0) == (e.a == x && e.b == y));
  }
  if (h <= 2) return;
  for (MEdge e = 0; e < m.edge_count(); ++e) {
    if (edges.count(e)) continue;
    const MultiEdge& edge = m.edge(e);
    CHECK_FALSE((nodes.count(edge.a) && nodes.count(edge.b)));
  }
}

}  // namespace

TEST_CASE("self-loop gives a hole of length 1") {
  const UndirectedGraph g = t::make_graph(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {5, 0}});
  const LabeledMultigraph m = multigraph_of(g);
  for (HoleStrategy s : {HoleStrategy::Exact, HoleStrategy::Fast, HoleStrategy::Amortized}) {
    const Hole hole = find_log_hole(m, s);
    CHECK(hole.size() == 1);
    CHECK(m.edge(hole.edges[0]).is_loop());
    check_hole(m, hole);
  }
}

TEST_CASE("K4 gives a triangle") {
  const LabeledMultigraph m = multigraph_of(t::complete_graph(4));
  for (HoleStrategy s : {HoleStrategy::Exact, HoleStrategy::Fast, HoleStrategy::Amortized}) {
    const Hole hole = find_log_hole(m, s);
    CHECK(hole.size() == 3);
    check_hole(m, hole);
    CHECK(is_chordless(m, hole));
  }
}

TEST_CASE("Petersen graph gives a 5-hole") {
  const UndirectedGraph g = t::petersen_graph();
  const LabeledMultigraph m = multigraph_of(g);
  CHECK(t::girth_oracle(g) == 5);
  for (HoleStrategy s : {HoleStrategy::Exact, HoleStrategy::Fast, HoleStrategy::Amortized}) {
    const Hole hole = find_log_hole(m, s);
    CHECK(hole.size() == 5);
    CHECK(hole.size() <= 2 * ceil_log2(10) + 1);
    check_hole(m, hole);
  }
}

TEST_CASE("theta multigraph gives a parallel pair") {
  const LabeledMultigraph m = multigraph_of(t::theta_graph());
  const Hole hole = find_log_hole(m, HoleStrategy::Fast);
  CHECK(hole.size() == 2);
  check_hole(m, hole);
}

TEST_CASE("acyclic multigraph is reported") {
  const LabeledMultigraph m({0, 1}, {MultiEdge{0, 1, EdgeLabel::Simple, 0}}, {});
  try {
    find_log_hole(m, HoleStrategy::Fast);
    FAIL("expected AcyclicMultigraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AcyclicMultigraph);
  }
}

TEST_CASE("remove_hole examples") {
  SUBCASE("K4 minus a triangle is a star") {
    const LabeledMultigraph m = multigraph_of(t::complete_graph(4));
    const Hole hole = find_log_hole(m);
    const LabeledMultigraph rest = remove_hole(m, hole);
    CHECK(rest.node_count() == 4);
    REQUIRE(rest.edge_count() == 3);
    std::set<MNode> hole_nodes(hole.nodes.begin(), hole.nodes.end());
    MNode centre = 0;
    while (hole_nodes.count(centre)) ++centre;
    for (const MultiEdge& e : rest.edges()) CHECK((e.a == centre || e.b == centre));
    for (std::size_t i = 0; i < rest.edge_count(); ++i) {
      const MEdge parent = rest.parent_edges()[i];
      CHECK(std::find(hole.edges.begin(), hole.edges.end(), parent) == hole.edges.end());
    }
  }
  SUBCASE("theta minus a 2-hole is one chain") {
    const LabeledMultigraph m = multigraph_of(t::theta_graph());
    const LabeledMultigraph rest = remove_hole(m, find_log_hole(m));
    REQUIRE(rest.edge_count() == 1);
    CHECK(rest.edge(0).label == EdgeLabel::Chain);
    CHECK(rest.chain_of(0).length() == 2);
  }
  SUBCASE("self-loop removal keeps the rest") {
    const UndirectedGraph g = t::make_graph(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {5, 0}});
    const LabeledMultigraph m = multigraph_of(g);
    const LabeledMultigraph rest = remove_hole(m, find_log_hole(m));
    CHECK(rest.edge_count() == 6);
    for (const MultiEdge& e : rest.edges()) CHECK(e.label == EdgeLabel::Simple);
  }
}

TEST_CASE("chord shortcutting turns a 4-cycle of K4 into a triangle") {
  const LabeledMultigraph m = multigraph_of(t::complete_graph(4));
  std::vector<MNode> nodes{0, 1, 2, 3};
  std::vector<MEdge> edges;
  for (std::size_t j = 0; j < 4; ++j) {
    const MNode x = nodes[j];
    const MNode y = nodes[(j + 1) % 4];
    for (MEdge e = 0; e < m.edge_count(); ++e) {
      if ((m.edge(e).a == x && m.edge(e).b == y) || (m.edge(e).a == y && m.edge(e).b == x)) {
        edges.push_back(e);
      }
    }
  }
  Hole hole = make_hole(m, nodes, edges);
  CHECK_FALSE(is_chordless(m, hole));
  StepCounter steps;
  shortcut_chords(m, hole, steps);
  CHECK(hole.size() == 3);
  check_hole(m, hole);
}

TEST_CASE("shortest cycle through a node") {
  const LabeledMultigraph m = multigraph_of(t::petersen_graph());
  StepCounter steps;
  for (MNode u = 0; u < m.node_count(); ++u) {
    const auto hole = shortest_cycle_through(m, u, steps);
    REQUIRE(hole.has_value());
    CHECK(hole->size() == 5);
    CHECK(std::find(hole->nodes.begin(), hole->nodes.end(), u) != hole->nodes.end());
    check_hole(m, *hole);
  }
}

TEST_CASE("strategies on random cubic graphs against the girth oracle") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {16, 32, 64, 128}) {
    for (int round = 0; round < 10; ++round) {
      const UndirectedGraph g = t::random_cubic(n, rng);
      const LabeledMultigraph m = multigraph_of(g);
      REQUIRE(m.node_count() == n);
      const std::size_t girth = t::girth_oracle(g);
      const Hole exact = find_log_hole(m, HoleStrategy::Exact);
      const Hole fast = find_log_hole(m, HoleStrategy::Fast);
      const Hole amortized = find_log_hole(m, HoleStrategy::Amortized);
      CHECK(exact.size() == girth);
      CHECK(fast.size() >= girth);
      CHECK(fast.size() <= girth + 1);
      CHECK(amortized.size() >= girth);
      CHECK(amortized.size() <= girth + 1);
      for (const Hole* h : {&exact, &fast, &amortized}) {
        check_hole(m, *h);
        CHECK(h->size() <= 2 * ceil_log2(n) + 1);
      }
    }
  }
}

TEST_CASE("holes of reduced random graphs are valid and chordless") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    const UndirectedGraph g = t::random_connected(5 + rng() % 20, 0.1 + 0.02 * (round % 10), rng);
    StepCounter steps;
    const Reduction r = reduce(g, steps);
    if (r.shape != Shape::General) continue;
    for (HoleStrategy s : {HoleStrategy::Exact, HoleStrategy::Fast, HoleStrategy::Amortized}) {
      check_hole(r.multigraph, find_log_hole(r.multigraph, s));
    }
  }
}

TEST_CASE("hole search is deterministic") {
  std::mt19937_64 rng(5);
  const UndirectedGraph g = t::random_cubic(200, rng);
  const LabeledMultigraph m = multigraph_of(g);
  for (HoleStrategy s : {HoleStrategy::Exact, HoleStrategy::Fast, HoleStrategy::Amortized}) {
    const Hole a = find_log_hole(m, s);
    const Hole b = find_log_hole(m, s);
    CHECK(a.nodes == b.nodes);
    CHECK(a.edges == b.edges);
    CHECK(a.nodes[0] == *std::min_element(a.nodes.begin(), a.nodes.end()));
  }
}

TEST_CASE("strategy names") {
  CHECK(parse_hole_strategy("exact") == HoleStrategy::Exact);
  CHECK(parse_hole_strategy("amortized") == HoleStrategy::Amortized);
  CHECK_FALSE(parse_hole_strategy("girth").has_value());
  CHECK(to_string(HoleStrategy::Fast) == "fast");
}
