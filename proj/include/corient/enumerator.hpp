#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "corient/counter.hpp"
#include "corient/hole.hpp"
#include "corient/legal.hpp"
#include "corient/multigraph.hpp"
#include "corient/reach.hpp"
#include "corient/steps.hpp"

namespace corient {

using OrientationSink = std::function<void(std::span<const EdgeState>)>;

/// All 2^s 3^b extended orientations of a multigraph, edge 0 moving fastest.
void extended_orientations_stream(const LabeledMultigraph& m, const OrientationSink& sink);

struct EnumeratorCounters {
  std::uint64_t m_prime_assignments = 0;
  std::uint64_t m_prime_cyclic = 0;
  std::uint64_t legal_calls = 0;
  std::uint64_t dead_end_calls = 0;
};

/**
 * @brief Streams every extended cyclic orientation of M exactly once.
 *
 * For each extended orientation of M' = M - hole: if it is already cyclic,
 * every orientation of the hole completes it; otherwise the reachability
 * matrix over the hole nodes is built and only the legal hole orientations
 * are produced.
 */
class ExtendedCyclicCursor {
 public:
  ExtendedCyclicCursor(const LabeledMultigraph& m, Hole hole, StepCounter& steps);

  ExtendedCyclicCursor(const ExtendedCyclicCursor&) = delete;
  ExtendedCyclicCursor& operator=(const ExtendedCyclicCursor&) = delete;

  bool next();
  /// States over the edges of M.
  const ExtendedOrientation& current() const noexcept { return current_; }

  const Hole& hole() const noexcept { return hole_; }
  const LabeledMultigraph& m_prime() const noexcept { return m_prime_; }
  EnumeratorCounters counters() const;

 private:
  enum class Inner { None, All, Legal };

  void write_hole(std::span<const EdgeState> hole_states);
  void load_next_m_prime();

  const LabeledMultigraph* m_;
  Hole hole_;
  LabeledMultigraph m_prime_;
  std::vector<EdgeLabel> hole_labels_;
  MixedRadixCounter outer_;
  ExtendedOrientation prime_states_;
  ExtendedOrientation current_;
  std::vector<EdgeState> hole_scratch_;

  std::vector<Arc> arcs_;
  Digraph digraph_;
  CycleDetector detector_;
  ReachBuilder reach_builder_;

  Inner inner_ = Inner::None;
  MixedRadixCounter all_;
  std::optional<LegalOrientationCursor> legal_;
  EnumeratorCounters finished_;
  StepCounter* steps_;
};

/// Every extended cyclic orientation of M, split along the given hole.
void enumerate_extended_cyclic(const LabeledMultigraph& m, const Hole& hole,
                               const OrientationSink& sink);

}  // namespace corient
