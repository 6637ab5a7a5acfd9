#include "corient/pipeline.hpp"

#include "corient/error.hpp"

namespace corient {

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::Fast: return "fast";
    case Algorithm::Absorbed: return "absorbed";
    case Algorithm::Naive: return "naive";
  }
  return "fast";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept {
  if (text == "fast") return Algorithm::Fast;
  if (text == "absorbed") return Algorithm::Absorbed;
  if (text == "naive") return Algorithm::Naive;
  return std::nullopt;
}

Pipeline::Pipeline(const UndirectedGraph& g, PipelineOptions options, StepCounter& steps)
    : g_(&g), options_(std::move(options)), steps_(&steps), start_steps_(steps.count()) {}

void Pipeline::start() {
  steps_->add(g_->node_count() + g_->edge_count());
  if (!g_->is_connected()) {
    throw Error(ErrorCode::Disconnected, "enumeration needs a connected graph");
  }
  reduction_ = reduce(*g_, *steps_);
  stats_.shape = reduction_.shape;
  stats_.multigraph_nodes = reduction_.multigraph.node_count();
  stats_.multigraph_edges = reduction_.multigraph.edge_count();
  if (reduction_.shape == Shape::Empty) {
    stats_.setup_steps = steps_->count() - start_steps_;
    phase_ = Phase::Done;
    return;
  }
  plan_ = std::make_unique<ExpansionPlan>(*g_, reduction_);
  expansion_.emplace(*plan_, *steps_);
  if (reduction_.shape == Shape::PureCycle) {
    pure_state_.assign(1, EdgeState::Forward);
    stats_.hole_length = 1;
    stats_.setup_steps = steps_->count() - start_steps_;
    phase_ = Phase::Enumerate;
    return;
  }
  if (options_.hole) {
    stats_.hole_length = options_.hole->size();
    cursor_.emplace(reduction_.multigraph, std::move(*options_.hole), *steps_);
    options_.hole.reset();
    stats_.setup_steps = steps_->count() - start_steps_;
    phase_ = Phase::Enumerate;
    return;
  }
  search_.emplace(reduction_.multigraph, options_.hole_strategy, *steps_);
  phase_ = Phase::HoleSearch;
}

bool Pipeline::next_extended() {
  if (reduction_.shape == Shape::PureCycle) {
    if (pure_cycle_emitted_ == 2) return false;
    pure_state_[0] = pure_cycle_emitted_++ == 0 ? EdgeState::Forward : EdgeState::Backward;
    expansion_->reset(pure_state_);
    return true;
  }
  if (!cursor_->next()) return false;
  expansion_->reset(cursor_->current());
  return true;
}

Pipeline::Status Pipeline::step() {
  switch (phase_) {
    case Phase::Start:
      start();
      return phase_ == Phase::Done ? Status::Done : Status::Working;
    case Phase::HoleSearch: {
      const std::uint64_t before = steps_->count();
      if (!search_->done()) {
        search_->step();
        stats_.hole_search_steps += steps_->count() - before;
        return Status::Working;
      }
      Hole hole = search_->result();
      stats_.hole_search_steps += steps_->count() - before;
      stats_.hole_length = hole.size();
      search_.reset();
      cursor_.emplace(reduction_.multigraph, std::move(hole), *steps_);
      stats_.setup_steps = steps_->count() - start_steps_;
      phase_ = Phase::Enumerate;
      return Status::Working;
    }
    case Phase::Enumerate:
      if (expansion_->next()) return Status::Solution;
      if (next_extended() && expansion_->next()) return Status::Solution;
      phase_ = Phase::Done;
      return Status::Done;
    case Phase::Done: return Status::Done;
  }
  return Status::Done;
}

bool Pipeline::next() {
  while (true) {
    switch (step()) {
      case Status::Solution: return true;
      case Status::Done: return false;
      case Status::Working: break;
    }
  }
}

PipelineStats Pipeline::stats() const {
  PipelineStats s = stats_;
  if (cursor_) s.enumerator = cursor_->counters();
  return s;
}

void enumerate_cyclic_orientations(const UndirectedGraph& g, const PipelineOptions& options,
                                   const std::function<void(const OrientationBits&)>& sink) {
  StepCounter steps;
  Pipeline pipeline(g, options, steps);
  while (pipeline.next()) sink(pipeline.current());
}

std::uint64_t count_cyclic_orientations(const UndirectedGraph& g, const PipelineOptions& options) {
  StepCounter steps;
  Pipeline pipeline(g, options, steps);
  std::uint64_t count = 0;
  while (pipeline.next()) ++count;
  return count;
}

}  // namespace corient
