#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>

#include "corient/bits.hpp"
#include "corient/enumerator.hpp"
#include "corient/expander.hpp"
#include "corient/graph.hpp"
#include "corient/hole.hpp"
#include "corient/preprocess.hpp"
#include "corient/steps.hpp"

namespace corient {

enum class Algorithm { Fast, Absorbed, Naive };

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept;

/// Pull interface shared by every enumeration strategy.
class SolutionSource {
 public:
  virtual ~SolutionSource() = default;
  /// Advances to the next solution; false when there is none left.
  virtual bool next() = 0;
  virtual const OrientationBits& current() const = 0;
};

struct PipelineOptions {
  HoleStrategy hole_strategy = HoleStrategy::Fast;
  /// Skip the hole search and split along this hole of the reduced multigraph.
  std::optional<Hole> hole;
};

struct PipelineStats {
  Shape shape = Shape::Empty;
  std::uint64_t setup_steps = 0;
  std::uint64_t hole_search_steps = 0;
  std::uint64_t hole_length = 0;
  std::uint64_t multigraph_nodes = 0;
  std::uint64_t multigraph_edges = 0;
  EnumeratorCounters enumerator;
};

/**
 * @brief The full enumeration: prune dead ends, compress chains, find a
 * log-hole, enumerate extended cyclic orientations, expand them.
 *
 * step() performs one bounded unit of work: the reduction, one BFS of the hole
 * search, or the production of one solution. The input graph must outlive the
 * pipeline and be connected (ErrorCode::Disconnected otherwise).
 */
class Pipeline final : public SolutionSource {
 public:
  enum class Status { Working, Solution, Done };

  Pipeline(const UndirectedGraph& g, PipelineOptions options, StepCounter& steps);

  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  Status step();
  bool next() override;
  const OrientationBits& current() const override { return expansion_->current(); }

  bool done() const noexcept { return phase_ == Phase::Done; }
  PipelineStats stats() const;
  const Reduction& reduction() const noexcept { return reduction_; }

 private:
  enum class Phase { Start, HoleSearch, Enumerate, Done };

  void start();
  bool next_extended();

  const UndirectedGraph* g_;
  PipelineOptions options_;
  StepCounter* steps_;
  std::uint64_t start_steps_;
  Phase phase_ = Phase::Start;

  Reduction reduction_;
  std::optional<HoleSearch> search_;
  std::optional<ExtendedCyclicCursor> cursor_;
  std::unique_ptr<ExpansionPlan> plan_;
  std::optional<ExpansionCursor> expansion_;
  int pure_cycle_emitted_ = 0;
  ExtendedOrientation pure_state_;
  PipelineStats stats_;
};

/// Streams every cyclic orientation of g through `sink`.
void enumerate_cyclic_orientations(const UndirectedGraph& g, const PipelineOptions& options,
                                   const std::function<void(const OrientationBits&)>& sink);

std::uint64_t count_cyclic_orientations(const UndirectedGraph& g,
                                        const PipelineOptions& options = {});

}  // namespace corient
