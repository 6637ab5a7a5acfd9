#include <doctest.h>

#include <sstream>

#include "corient/error.hpp"
#include "corient/graph.hpp"
#include "graphs.hpp"

using namespace corient;
using corient::testing::kahn_acyclic;

namespace {

ErrorCode parse_error(std::string_view text, ParseOptions options = {}) {
  try {
    parse_edge_list(text, options);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::MalformedLine;
}

}  // namespace

TEST_CASE("parse: triangle in canonical order") {
  const UndirectedGraph g = parse_edge_list("0 1\n1 2\n0 2");
  CHECK(g.node_count() == 3);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.degree(0) == 2);
  CHECK(g.find_edge(2, 1) == EdgeId{2});
  CHECK_FALSE(g.find_edge(0, 0).has_value());
}

TEST_CASE("parse: errors") {
  CHECK(parse_error("0 0") == ErrorCode::SelfLoopInInput);
  CHECK(parse_error("0 1\n1 0") == ErrorCode::DuplicateEdge);
  CHECK(parse_error("0 1\n0 1") == ErrorCode::DuplicateEdge);
  CHECK(parse_error("0 x") == ErrorCode::MalformedLine);
  CHECK(parse_error("0 1 2") == ErrorCode::MalformedLine);
  CHECK(parse_error("-1 2") == ErrorCode::MalformedLine);
  CHECK(parse_error("0 1\n2 3", ParseOptions{true}) == ErrorCode::Disconnected);
}

TEST_CASE("parse: disconnected input is accepted without the strict flag") {
  const UndirectedGraph g = parse_edge_list("0 1\n2 3");
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("parse: comments, blank lines and the header") {
  const UndirectedGraph g = parse_edge_list("# a triangle\n\nc also a comment\n0 1\n  1 2  \n0 2\n");
  CHECK(g.edge_count() == 3);
  const UndirectedGraph h = parse_edge_list("p edge 3 3\ne 0 1\ne 1 2\n0 2\n");
  CHECK(h.edge_count() == 3);
  CHECK(parse_error("p edge 4 3\ne 0 1\ne 1 2\ne 0 2\n") == ErrorCode::MalformedLine);
  CHECK(parse_error("p edge 3 2\ne 0 1\ne 1 2\ne 0 2\n") == ErrorCode::MalformedLine);
  CHECK(parse_error("e 0 1\n") == ErrorCode::MalformedLine);
  CHECK(parse_error("0 1\np edge 2 1\n") == ErrorCode::MalformedLine);
}

TEST_CASE("parse: sparse labels map to dense ids in label order") {
  const UndirectedGraph g = parse_edge_list("30 10\n10 20\n20 30\n");
  CHECK(g.node_count() == 3);
  CHECK(g.label(0) == 10);
  CHECK(g.label(1) == 20);
  CHECK(g.label(2) == 30);
  CHECK(g.edge(1) == Edge{0, 2});
}

TEST_CASE("from_edges rejects bad input") {
  const std::vector<std::pair<NodeId, NodeId>> loop{{1, 1}};
  CHECK_THROWS_AS(UndirectedGraph::from_edges(2, loop), Error);
  const std::vector<std::pair<NodeId, NodeId>> out_of_range{{0, 5}};
  CHECK_THROWS_AS(UndirectedGraph::from_edges(2, out_of_range), Error);
}

TEST_CASE("digraph_has_cycle examples") {
  CHECK(digraph_has_cycle(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
  CHECK_FALSE(digraph_has_cycle(3, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}}));
  CHECK_FALSE(digraph_has_cycle(3, std::vector<Arc>{}));
  CHECK(digraph_has_cycle(1, std::vector<Arc>{{0, 0}}));
  CHECK(digraph_has_cycle(2, std::vector<Arc>{{0, 1}, {1, 0}}));
}

TEST_CASE("digraph_has_cycle agrees with topological sorting on all small digraphs") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const bool loops = n <= 3;
    std::vector<Arc> candidates;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (u != v || loops) candidates.push_back({u, v});
      }
    }
    std::vector<Arc> arcs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
      arcs.clear();
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if ((mask >> i) & 1U) arcs.push_back(candidates[i]);
      }
      if (digraph_has_cycle(n, arcs) == kahn_acyclic(n, arcs)) {
        FAIL("disagreement on n=" << n << " mask=" << mask);
      }
      ++checked;
    }
  }
  CHECK(checked == 2 + 16 + 512 + 4096 + (std::size_t{1} << 20));
}

TEST_CASE("canonical_bits examples and round trip") {
  const UndirectedGraph g = corient::testing::complete_graph(3);
  CHECK(canonical_bits(g, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}}).to_string() == "111");
  CHECK(canonical_bits(g, std::vector<Arc>{{1, 0}, {2, 0}, {2, 1}}).to_string() == "000");
  CHECK(canonical_bits(g, std::vector<Arc>{{2, 1}, {1, 0}, {0, 2}}).to_string() == "010");
  for (std::uint32_t x = 0; x < 8; ++x) {
    OrientationBits bits(3);
    for (std::size_t i = 0; i < 3; ++i) bits.set(i, (x >> i) & 1U);
    const auto arcs = orientation_arcs(g, bits);
    CHECK(canonical_bits(g, arcs) == bits);
  }
}

TEST_CASE("canonical_bits rejects incomplete assignments") {
  const UndirectedGraph g = corient::testing::complete_graph(3);
  const auto code = [&](std::vector<Arc> arcs) {
    try {
      canonical_bits(g, arcs);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::MalformedLine;
  };
  CHECK(code({{0, 1}, {0, 2}}) == ErrorCode::IncompleteAssignment);
  CHECK(code({{0, 1}, {1, 0}, {1, 2}}) == ErrorCode::IncompleteAssignment);
  CHECK(code({{0, 1}, {0, 2}, {1, 2}, {2, 1}}) == ErrorCode::IncompleteAssignment);
  CHECK(code({{0, 1}, {0, 2}, {1, 3}}) == ErrorCode::IncompleteAssignment);
}

TEST_CASE("OrientationBits ordering is lexicographic on the bit sequence") {
  const auto a = OrientationBits::from_string("0111");
  const auto b = OrientationBits::from_string("1000");
  const auto c = OrientationBits::from_string("1001");
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a.to_string() == "0111");
  OrientationBits wide(130);
  OrientationBits wider(130);
  wider.set(129, true);
  CHECK(wide < wider);
  wide.set(70, true);
  CHECK(wider < wide);
  CHECK(std::hash<OrientationBits>{}(wide) != std::hash<OrientationBits>{}(wider));
}
