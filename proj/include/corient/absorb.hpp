#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "corient/bits.hpp"
#include "corient/graph.hpp"
#include "corient/hole.hpp"
#include "corient/pipeline.hpp"
#include "corient/preprocess.hpp"
#include "corient/steps.hpp"
#include "corient/trie.hpp"

namespace corient {

enum class ShortcutKind {
  Delegate,   // not the general shape, or no cycle through the probe node
  SmallHole,  // short cycle found: run the pipeline on it, no hole search
  Producer,   // long cycle: interleave the cycle producer with the pipeline
};

struct ShortcutResult {
  ShortcutKind kind = ShortcutKind::Delegate;
  std::optional<Hole> hole;
  /// ceil(log2 n) for the input's node count n.
  std::size_t threshold = 0;
};

/// One BFS from multigraph node 0 for the shortest cycle through it, compared
/// with ceil(log2 n).
ShortcutResult shortcut_phase(const UndirectedGraph& g, const Reduction& reduction,
                              StepCounter& steps);

/**
 * @brief Cheap producer of up to `limit` cyclic orientations sharing one
 * directed cycle.
 *
 * The hole's input edges are oriented as one directed cycle; the remaining
 * input edges take the first values of a binary counter in canonical edge
 * order, edge with the smallest id as the least significant bit.
 */
class CycleProducer final : public SolutionSource {
 public:
  CycleProducer(const UndirectedGraph& g, const Reduction& reduction, const Hole& hole,
                std::size_t limit, StepCounter& steps);

  bool next() override;
  const OrientationBits& current() const override { return bits_; }
  std::size_t total() const noexcept { return total_; }

 private:
  StepCounter* steps_;
  OrientationBits bits_;
  std::vector<EdgeId> free_edges_;
  std::size_t total_ = 0;
  std::size_t produced_ = 0;
};

struct AbsorbOptions {
  HoleStrategy hole_strategy = HoleStrategy::Fast;
  /// Slowdown factor applied to the phase-one work estimate.
  double slowdown = 2.0;
};

struct AbsorbStats {
  ShortcutKind branch = ShortcutKind::Delegate;
  std::uint64_t first_cycle_length = 0;
  std::uint64_t threshold = 0;
  std::uint64_t z1_size = 0;
  std::uint64_t collected = 0;  // pipeline solutions gathered during phase one
  std::uint64_t budget = 0;
  std::uint64_t slot = 0;
  std::uint64_t phase1_end_step = 0;
  std::uint64_t substitutions = 0;
  std::uint64_t peak_dictionary_nodes = 0;
  std::uint64_t peak_memory_bits = 0;
  std::uint64_t peak_queue = 0;
  std::optional<std::uint64_t> queue_at_exhaustion;
  std::uint64_t queue_size = 0;
  PipelineStats pipeline;
};

/**
 * @brief Enumeration whose setup is absorbed into the delay.
 *
 * When the first probed cycle is long, the cycle producer's n solutions are
 * emitted evenly spaced over a step budget while the pipeline runs its setup
 * and first n solutions in bounded quanta. The cycle producer's output goes
 * into a trie; pipeline output from phase one that is not in the trie is
 * queued. Afterwards every pipeline solution already in the trie is replaced
 * by one queued solution, so nothing is emitted twice.
 */
class AbsorbedEnumerator final : public SolutionSource {
 public:
  AbsorbedEnumerator(const UndirectedGraph& g, AbsorbOptions options, StepCounter& steps);

  AbsorbedEnumerator(const AbsorbedEnumerator&) = delete;
  AbsorbedEnumerator& operator=(const AbsorbedEnumerator&) = delete;

  bool next() override;
  const OrientationBits& current() const override { return *current_; }

  AbsorbStats stats() const;

 private:
  enum class State { Init, Delegate, PhaseOne, PhaseTwo, Done };

  void init();
  bool phase_one_work();
  bool phase_one_work_done() const noexcept;
  void track_memory();

  const UndirectedGraph* g_;
  AbsorbOptions options_;
  StepCounter* steps_;
  State state_ = State::Init;

  Reduction reduction_;
  std::unique_ptr<Pipeline> pipeline_;
  std::unique_ptr<CycleProducer> producer_;
  std::unique_ptr<BitstringTrie> dictionary_;

  std::deque<OrientationBits> z_buffer_;
  std::vector<OrientationBits> pending_;
  std::deque<OrientationBits> queue_;
  std::size_t z_generated_ = 0;
  std::size_t z_emitted_ = 0;
  std::size_t filtered_ = 0;
  std::size_t want_ = 0;
  bool pipeline_done_ = false;
  std::uint64_t next_deadline_ = 0;

  OrientationBits held_;
  const OrientationBits* current_ = &held_;
  AbsorbStats stats_;
};

}  // namespace corient
