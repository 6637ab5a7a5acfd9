#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "corient/bits.hpp"
#include "corient/graph.hpp"
#include "corient/multigraph.hpp"
#include "corient/preprocess.hpp"
#include "corient/steps.hpp"

namespace corient {

/**
 * @brief Binary counter over the h edges of a path that skips the two
 * patterns orienting it as a directed path.
 *
 * Bit i set means path edge i points along the chain's forward direction.
 * Patterns run 1, 2, ..., 2^h - 2 with edge 0 as the least significant bit.
 */
class BrokenPatternCounter {
 public:
  explicit BrokenPatternCounter(std::size_t h);

  std::size_t length() const noexcept { return forward_.size(); }
  bool forward(std::size_t i) const noexcept { return forward_[i] != 0; }

  void reset();
  /// Moves to the next pattern and reports each flipped position. Returns
  /// false when it wrapped around to the first pattern.
  template <typename OnFlip>
  bool advance(OnFlip&& on_flip);

 private:
  std::vector<char> forward_;
  std::size_t ones_ = 0;
};

template <typename OnFlip>
bool BrokenPatternCounter::advance(OnFlip&& on_flip) {
  std::size_t i = 0;
  while (forward_[i]) {
    forward_[i] = 0;
    --ones_;
    on_flip(i);
    ++i;
  }
  forward_[i] = 1;
  ++ones_;
  on_flip(i);
  if (ones_ < forward_.size()) return true;
  for (std::size_t j = 1; j < forward_.size(); ++j) {
    forward_[j] = 0;
    on_flip(j);
  }
  ones_ = 1;
  return false;
}

/// All 2^h - 2 non-path orientations of a chain of h >= 2 edges, as
/// Forward/Backward per path edge. Throws ErrorCode::InvalidChainLength.
void broken_chain_patterns(std::size_t h,
                           const std::function<void(std::span<const EdgeState>)>& sink);

/// Where each multigraph edge lands in the input graph's bit vector.
class ExpansionPlan {
 public:
  ExpansionPlan(const UndirectedGraph& g, const Reduction& reduction);

  std::size_t input_edges() const noexcept { return input_edges_; }
  std::size_t multigraph_edges() const noexcept { return begin_.size() - 1; }
  bool is_chain(MEdge e) const noexcept { return chain_[e] != 0; }

  /// Input edges of multigraph edge e in path order, with the bit value that
  /// corresponds to the forward direction.
  std::span<const EdgeId> targets(MEdge e) const noexcept {
    return {targets_.data() + begin_[e], targets_.data() + begin_[e + 1]};
  }
  std::span<const char> forward_bits(MEdge e) const noexcept {
    return {forward_bit_.data() + begin_[e], forward_bit_.data() + begin_[e + 1]};
  }
  std::span<const EdgeId> dead_end_edges() const noexcept { return dead_ends_; }

  /// Flat views: edge e owns positions [offsets()[e], offsets()[e + 1]).
  std::span<const std::size_t> offsets() const noexcept { return begin_; }
  std::span<const EdgeId> all_targets() const noexcept { return targets_; }
  std::span<const char> all_forward_bits() const noexcept { return forward_bit_; }

 private:
  std::size_t input_edges_ = 0;
  std::vector<std::size_t> begin_;
  std::vector<EdgeId> targets_;
  std::vector<char> forward_bit_;
  std::vector<char> chain_;
  std::vector<EdgeId> dead_ends_;
};

/**
 * @brief Streams the input-graph orientations of one extended orientation of M.
 *
 * Directed chains copy their direction to every path edge, broken chains run
 * through their 2^h - 2 patterns, dead-end edges take both directions. Broken
 * chains move fastest in multigraph edge order, dead-end edges come last.
 */
class ExpansionCursor {
 public:
  ExpansionCursor(const ExpansionPlan& plan, StepCounter& steps);

  void reset(std::span<const EdgeState> states);
  bool next();
  const OrientationBits& current() const noexcept { return bits_; }

 private:
  void write_path_bit(MEdge e, std::size_t i, bool forward);

  const ExpansionPlan* plan_;
  StepCounter* steps_;
  OrientationBits bits_;
  std::vector<MEdge> broken_;
  std::vector<BrokenPatternCounter> patterns_;  // first broken_.size() in use
  bool first_ = false;
  bool exhausted_ = true;
};

/// Expansion of one extended orientation, streamed.
void expand_solution(const ExpansionPlan& plan, std::span<const EdgeState> states,
                     const std::function<void(const OrientationBits&)>& sink);

/// Number of input orientations one extended orientation expands to; saturates
/// at UINT64_MAX.
std::uint64_t expansion_count(const ExpansionPlan& plan, std::span<const EdgeState> states);

}  // namespace corient
