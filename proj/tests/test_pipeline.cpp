#include <doctest.h>

#include <random>

#include "corient/error.hpp"
#include "corient/pipeline.hpp"
#include "graphs.hpp"

using namespace corient;
namespace t = corient::testing;

namespace {

std::vector<OrientationBits> run(const UndirectedGraph& g, PipelineOptions options = {}) {
  StepCounter steps;
  Pipeline p(g, std::move(options), steps);
  return t::drain(p);
}

}  // namespace

TEST_CASE("closed-form counts") {
  for (std::size_t n = 2; n <= 9; ++n) CHECK(count_cyclic_orientations(t::path_graph(n)) == 0);
  CHECK(count_cyclic_orientations(t::star_graph(5)) == 0);
  for (std::size_t n = 3; n <= 10; ++n) CHECK(count_cyclic_orientations(t::cycle_graph(n)) == 2);
  CHECK(count_cyclic_orientations(t::complete_graph(3)) == 2);
  CHECK(count_cyclic_orientations(t::complete_graph(4)) == 40);
  CHECK(count_cyclic_orientations(t::complete_graph(5)) == 904);
  CHECK(count_cyclic_orientations(t::necklace(4)) == 32);
}

TEST_CASE("every strategy matches the oracle on named graphs") {
  for (const UndirectedGraph& g :
       {t::complete_graph(4), t::complete_graph(5), t::theta_graph(), t::theta_graph(4, 3),
        t::k4_subdivided(), t::petersen_graph(), t::diamond(), t::necklace(5),
        t::triangle_with_pendant(), t::cycle_graph(7)}) {
    const auto expected = t::oracle_cyclic_set(g);
    for (HoleStrategy s : {HoleStrategy::Exact, HoleStrategy::Fast, HoleStrategy::Amortized}) {
      std::size_t dups = 0;
      CHECK(t::sorted(run(g, {s, std::nullopt}), &dups) == expected);
      CHECK(dups == 0);
    }
  }
}

TEST_CASE("random connected graphs match the oracle") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 150; ++round) {
    const UndirectedGraph g = t::random_connected(3 + rng() % 9, 0.1 + 0.03 * (round % 8), rng);
    if (g.edge_count() > 16) continue;
    std::size_t dups = 0;
    CHECK(t::sorted(run(g), &dups) == t::oracle_cyclic_set(g));
    CHECK(dups == 0);
  }
}

TEST_CASE("given hole skips the search") {
  const UndirectedGraph g = t::petersen_graph();
  StepCounter steps;
  Pipeline probe(g, {}, steps);
  REQUIRE(probe.next());
  const Hole hole = find_log_hole(probe.reduction().multigraph, HoleStrategy::Exact);
  StepCounter steps2;
  Pipeline p(g, {HoleStrategy::Fast, hole}, steps2);
  const auto out = t::drain(p);
  CHECK(p.stats().hole_search_steps == 0);
  CHECK(p.stats().hole_length == 5);
  CHECK(t::sorted(out, nullptr) == t::oracle_cyclic_set(g));
}

TEST_CASE("step() reports progress in bounded units") {
  const UndirectedGraph g = t::complete_graph(5);
  StepCounter steps;
  Pipeline p(g, {}, steps);
  std::size_t solutions = 0;
  std::size_t working = 0;
  for (;;) {
    const auto status = p.step();
    if (status == Pipeline::Status::Done) break;
    if (status == Pipeline::Status::Solution) ++solutions;
    if (status == Pipeline::Status::Working) ++working;
  }
  CHECK(solutions == 904);
  CHECK(working >= 1);
  CHECK(p.done());
  CHECK(p.stats().enumerator.dead_end_calls == 0);
  CHECK(p.stats().multigraph_edges == 10);
}

TEST_CASE("disconnected input is rejected") {
  const UndirectedGraph g = t::make_graph(4, {{0, 1}, {2, 3}});
  StepCounter steps;
  Pipeline p(g, {}, steps);
  try {
    p.next();
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("output order is deterministic") {
  const UndirectedGraph g = t::petersen_graph();
  CHECK(run(g) == run(g));
}

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("absorbed") == Algorithm::Absorbed);
  CHECK_FALSE(parse_algorithm("slow").has_value());
  CHECK(to_string(Algorithm::Naive) == "naive");
}
