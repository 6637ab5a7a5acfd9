#include "corient/oracle.hpp"

#include <algorithm>

#include "corient/absorb.hpp"
#include "corient/error.hpp"

namespace corient {

namespace {

void check_size(const UndirectedGraph& g) {
  if (g.edge_count() > kOracleMaxEdges) {
    throw Error(ErrorCode::TooLarge, "brute force is limited to " +
                                         std::to_string(kOracleMaxEdges) + " edges, graph has " +
                                         std::to_string(g.edge_count()));
  }
}

}  // namespace

BruteForceCursor::BruteForceCursor(const UndirectedGraph& g, StepCounter& steps)
    : g_(&g), steps_(&steps), bits_(g.edge_count()) {
  check_size(g);
  end_ = std::uint64_t{1} << g.edge_count();
}

bool BruteForceCursor::next() {
  const std::size_t m = g_->edge_count();
  while (value_ < end_) {
    const std::uint64_t x = value_++;
    arcs_.clear();
    for (std::size_t i = 0; i < m; ++i) {
      const bool up = (x >> (m - 1 - i)) & 1U;
      bits_.set(i, up);
      const Edge& e = g_->edge(static_cast<EdgeId>(i));
      arcs_.push_back(up ? Arc{e.u, e.v} : Arc{e.v, e.u});
    }
    steps_->add(m);
    if (detector_.has_cycle(g_->node_count(), arcs_, *steps_)) return true;
  }
  return false;
}

void brute_force_enumerate(const UndirectedGraph& g,
                           const std::function<void(const OrientationBits&)>& sink) {
  StepCounter steps;
  BruteForceCursor cursor(g, steps);
  while (cursor.next()) sink(cursor.current());
}

OrientationCounts brute_force_counts(const UndirectedGraph& g) {
  check_size(g);
  OrientationCounts counts;
  counts.total = std::uint64_t{1} << g.edge_count();
  brute_force_enumerate(g, [&](const OrientationBits&) { ++counts.cyclic; });
  counts.acyclic = counts.total - counts.cyclic;
  return counts;
}

VerifyReport verify(const UndirectedGraph& g, Algorithm algorithm, HoleStrategy strategy) {
  check_size(g);
  std::vector<OrientationBits> expected;
  brute_force_enumerate(g, [&](const OrientationBits& b) { expected.push_back(b); });

  std::vector<OrientationBits> produced;
  StepCounter steps;
  std::unique_ptr<SolutionSource> source;
  switch (algorithm) {
    case Algorithm::Fast:
      source = std::make_unique<Pipeline>(g, PipelineOptions{strategy, std::nullopt}, steps);
      break;
    case Algorithm::Absorbed:
      source = std::make_unique<AbsorbedEnumerator>(g, AbsorbOptions{strategy}, steps);
      break;
    case Algorithm::Naive: source = std::make_unique<BruteForceCursor>(g, steps); break;
  }
  while (source->next()) produced.push_back(source->current());

  VerifyReport report;
  report.oracle_count = expected.size();
  report.produced_count = produced.size();
  std::sort(produced.begin(), produced.end());
  std::vector<OrientationBits> unique;
  unique.reserve(produced.size());
  for (std::size_t i = 0; i < produced.size(); ++i) {
    if (i > 0 && produced[i] == produced[i - 1]) {
      report.duplicate.push_back(produced[i]);
    } else {
      unique.push_back(produced[i]);
    }
  }
  std::set_difference(expected.begin(), expected.end(), unique.begin(), unique.end(),
                      std::back_inserter(report.missing));
  std::set_difference(unique.begin(), unique.end(), expected.begin(), expected.end(),
                      std::back_inserter(report.extra));
  report.equal = report.missing.empty() && report.extra.empty() && report.duplicate.empty();
  return report;
}

}  // namespace corient
