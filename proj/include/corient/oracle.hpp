#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "corient/bits.hpp"
#include "corient/graph.hpp"
#include "corient/hole.hpp"
#include "corient/pipeline.hpp"
#include "corient/steps.hpp"

namespace corient {

/// Largest edge count the brute-force oracle accepts.
inline constexpr std::size_t kOracleMaxEdges = 24;

/**
 * @brief Filters all 2^m orientations through a directed-cycle check.
 *
 * Orientations are visited in increasing lexicographic order of their bit
 * string (edge 0 is the most significant position), so the cyclic ones come
 * out sorted and distinct. Throws ErrorCode::TooLarge above kOracleMaxEdges.
 */
class BruteForceCursor final : public SolutionSource {
 public:
  BruteForceCursor(const UndirectedGraph& g, StepCounter& steps);

  bool next() override;
  const OrientationBits& current() const override { return bits_; }

  std::uint64_t visited() const noexcept { return value_; }

 private:
  const UndirectedGraph* g_;
  StepCounter* steps_;
  std::uint64_t value_ = 0;
  std::uint64_t end_;
  OrientationBits bits_;
  std::vector<Arc> arcs_;
  CycleDetector detector_;
};

void brute_force_enumerate(const UndirectedGraph& g,
                           const std::function<void(const OrientationBits&)>& sink);

struct OrientationCounts {
  std::uint64_t total = 0;
  std::uint64_t acyclic = 0;
  std::uint64_t cyclic = 0;
};

OrientationCounts brute_force_counts(const UndirectedGraph& g);

struct VerifyReport {
  bool equal = false;
  std::uint64_t oracle_count = 0;
  std::uint64_t produced_count = 0;
  std::vector<OrientationBits> missing;
  std::vector<OrientationBits> extra;
  std::vector<OrientationBits> duplicate;
};

/// Runs the chosen enumerator and the oracle and compares them as sets.
VerifyReport verify(const UndirectedGraph& g, Algorithm algorithm,
                    HoleStrategy strategy = HoleStrategy::Fast);

}  // namespace corient
