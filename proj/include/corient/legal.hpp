#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "corient/counter.hpp"
#include "corient/hole.hpp"
#include "corient/multigraph.hpp"
#include "corient/reach.hpp"
#include "corient/steps.hpp"

namespace corient {

/// Sink for orientations of the hole. States are in hole terms: Forward on
/// hole edge j is the arc c_j -> c_{j+1}.
using HoleSink = std::function<void(std::span<const EdgeState>)>;

/// Labels of the hole edges, in hole order.
std::vector<EdgeLabel> hole_labels(const LabeledMultigraph& m, const Hole& hole);

/// Reachability among hole nodes in the oriented M'. Broken edges are not
/// traversable.
ReachMatrix build_reach_matrix(const LabeledMultigraph& m_prime,
                               std::span<const EdgeState> states, const Hole& hole,
                               StepCounter& steps);

/**
 * @brief Streams the legal orientations of a hole with respect to an acyclic
 * oriented M' summarized by its reachability matrix.
 *
 * Ternary recursion over the hole edges in order, branches tried as Forward,
 * Backward, then Broken (chain edges only). A branch is entered only when the
 * updated matrix is already cyclic or the undecided suffix can still close a
 * cycle, so every entered call yields at least one orientation. The recursion
 * is kept on an explicit stack so it can be suspended between emissions.
 */
class LegalOrientationCursor {
 public:
  LegalOrientationCursor(std::vector<EdgeLabel> labels, ReachMatrix base, StepCounter& steps);

  bool next();
  std::span<const EdgeState> current() const noexcept { return states_; }

  /// Number of recursive calls entered, and how many of them emitted nothing.
  std::uint64_t calls() const noexcept { return calls_; }
  std::uint64_t dead_end_calls() const noexcept { return dead_end_calls_; }

 private:
  struct Frame {
    ReachMatrix reach;
    std::uint8_t next_branch = 0;
    std::uint64_t emitted = 0;
  };

  void pop();

  std::vector<EdgeLabel> labels_;
  std::vector<Frame> frames_;
  std::vector<EdgeState> states_;
  std::ptrdiff_t depth_ = -1;
  bool started_ = false;
  bool finished_ = false;
  std::uint64_t calls_ = 0;
  std::uint64_t dead_end_calls_ = 0;
  StepCounter* steps_;
};

/// Every legal orientation of the hole, each once.
void legal_orientations(std::span<const EdgeLabel> labels, const ReachMatrix& base,
                        const HoleSink& sink);

/// All 2^s 3^b extended orientations of the hole, as a mixed-radix count.
void all_orientations_of_hole(std::span<const EdgeLabel> labels, const HoleSink& sink);

MixedRadixCounter radix_counter(std::span<const EdgeLabel> labels);

}  // namespace corient
