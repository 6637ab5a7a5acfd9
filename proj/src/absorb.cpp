#include "corient/absorb.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "corient/error.hpp"
#include "corient/expander.hpp"

namespace corient {

namespace {

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

ShortcutResult shortcut_phase(const UndirectedGraph& g, const Reduction& reduction,
                              StepCounter& steps) {
  ShortcutResult result;
  result.threshold = ceil_log2(g.node_count());
  if (reduction.shape != Shape::General) return result;
  result.hole = shortest_cycle_through(reduction.multigraph, 0, steps);
  if (!result.hole) return result;
  result.kind =
      result.hole->size() < result.threshold ? ShortcutKind::SmallHole : ShortcutKind::Producer;
  return result;
}

CycleProducer::CycleProducer(const UndirectedGraph& g, const Reduction& reduction,
                             const Hole& hole, std::size_t limit, StepCounter& steps)
    : steps_(&steps), bits_(g.edge_count()) {
  const ExpansionPlan plan(g, reduction);
  std::vector<char> fixed(g.edge_count(), 0);
  for (std::size_t j = 0; j < hole.size(); ++j) {
    const MEdge e = hole.edges[j];
    const auto targets = plan.targets(e);
    const auto forward = plan.forward_bits(e);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const bool bit = hole.aligned[j] ? forward[k] != 0 : forward[k] == 0;
      bits_.set(targets[k], bit);
      fixed[targets[k]] = 1;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!fixed[e]) free_edges_.push_back(e);
  }
  steps.add(g.edge_count());
  total_ = free_edges_.size() >= 63
               ? limit
               : std::min<std::size_t>(limit, std::size_t{1} << free_edges_.size());
}

bool CycleProducer::next() {
  if (produced_ == total_) return false;
  if (produced_ > 0) {
    // Binary increment over the free edges.
    for (EdgeId e : free_edges_) {
      steps_->add();
      const bool was = bits_.test(e);
      bits_.flip(e);
      if (!was) break;
    }
  }
  ++produced_;
  return true;
}

AbsorbedEnumerator::AbsorbedEnumerator(const UndirectedGraph& g, AbsorbOptions options,
                                       StepCounter& steps)
    : g_(&g), options_(options), steps_(&steps) {}

void AbsorbedEnumerator::init() {
  steps_->add(g_->node_count() + g_->edge_count());
  if (!g_->is_connected()) {
    throw Error(ErrorCode::Disconnected, "enumeration needs a connected graph");
  }
  reduction_ = reduce(*g_, *steps_);
  const ShortcutResult shortcut = shortcut_phase(*g_, reduction_, *steps_);
  stats_.branch = shortcut.kind;
  stats_.threshold = shortcut.threshold;
  if (shortcut.hole) stats_.first_cycle_length = shortcut.hole->size();

  PipelineOptions pipeline_options{options_.hole_strategy, std::nullopt};
  if (shortcut.kind == ShortcutKind::SmallHole) pipeline_options.hole = *shortcut.hole;
  pipeline_ = std::make_unique<Pipeline>(*g_, pipeline_options, *steps_);
  if (shortcut.kind != ShortcutKind::Producer) {
    state_ = State::Delegate;
    return;
  }

  const std::size_t n = g_->node_count();
  const std::size_t m = g_->edge_count();
  producer_ = std::make_unique<CycleProducer>(*g_, reduction_, *shortcut.hole, n, *steps_);
  dictionary_ = std::make_unique<BitstringTrie>(m);
  stats_.z1_size = producer_->total();
  // Collecting exactly |Z1| pipeline solutions makes the queue hold exactly the
  // duplicates the pipeline will still produce.
  want_ = stats_.z1_size;

  // Work estimate for phase one: producing and storing Z1, then the
  // pipeline's setup, hole search and first n solutions, then filtering.
  const std::uint64_t nm = reduction_.multigraph.node_count();
  const std::uint64_t mm = reduction_.multigraph.edge_count();
  const std::uint64_t search = options_.hole_strategy == HoleStrategy::Exact
                                   ? saturating_mul(nm, nm + 2 * mm)
                                   : saturating_mul(nm, 4 * nm);
  const std::uint64_t per_solution = saturating_mul(4 * m, ceil_log2(n) + 1);
  const std::uint64_t t1 = saturating_mul(stats_.z1_size, 2 * m + 2);
  const std::uint64_t t2 = 4 * (n + m) + search + saturating_mul(n, per_solution + m);
  const double scaled = options_.slowdown * static_cast<double>(t1 + t2);
  stats_.budget = static_cast<std::uint64_t>(std::ceil(scaled));
  stats_.slot = std::max<std::uint64_t>(
      1, (stats_.budget + stats_.z1_size - 1) / std::max<std::uint64_t>(1, stats_.z1_size));
  next_deadline_ = steps_->count();
  state_ = State::PhaseOne;
}

bool AbsorbedEnumerator::phase_one_work_done() const noexcept {
  return z_generated_ == stats_.z1_size && pipeline_done_ && filtered_ == pending_.size();
}

void AbsorbedEnumerator::track_memory() {
  const std::size_t words = (g_->edge_count() + 63) / 64;
  const std::uint64_t stored = z_buffer_.size() + pending_.size() + queue_.size();
  const std::uint64_t bits = dictionary_->memory_bits() + stored * words * 64;
  stats_.peak_memory_bits = std::max(stats_.peak_memory_bits, bits);
  stats_.peak_dictionary_nodes =
      std::max<std::uint64_t>(stats_.peak_dictionary_nodes, dictionary_->node_count());
  stats_.peak_queue = std::max<std::uint64_t>(stats_.peak_queue, queue_.size());
}

bool AbsorbedEnumerator::phase_one_work() {
  if (z_generated_ < stats_.z1_size) {
    producer_->next();
    steps_->add(g_->edge_count());
    z_buffer_.push_back(producer_->current());
    dictionary_->insert(producer_->current(), *steps_);
    ++z_generated_;
  } else if (!pipeline_done_) {
    switch (pipeline_->step()) {
      case Pipeline::Status::Working:
        break;
      case Pipeline::Status::Solution:
        steps_->add(g_->edge_count());
        pending_.push_back(pipeline_->current());
        ++stats_.collected;
        if (stats_.collected == want_) pipeline_done_ = true;
        break;
      case Pipeline::Status::Done:
        pipeline_done_ = true;
        break;
    }
  } else if (filtered_ < pending_.size()) {
    OrientationBits& s = pending_[filtered_++];
    if (!dictionary_->contains(s, *steps_)) {
      steps_->add(g_->edge_count());
      queue_.push_back(std::move(s));
    }
    if (filtered_ == pending_.size()) {
      pending_.clear();
      pending_.shrink_to_fit();
      filtered_ = 0;
    }
  } else {
    return false;
  }
  track_memory();
  return true;
}

bool AbsorbedEnumerator::next() {
  if (state_ == State::Init) init();
  if (state_ == State::Delegate) {
    if (!pipeline_->next()) {
      state_ = State::Done;
      return false;
    }
    current_ = &pipeline_->current();
    return true;
  }
  if (state_ == State::PhaseOne) {
    for (;;) {
      const bool all_work = phase_one_work_done();
      if (!z_buffer_.empty() && (steps_->count() >= next_deadline_ || all_work)) {
        held_ = std::move(z_buffer_.front());
        z_buffer_.pop_front();
        ++z_emitted_;
        next_deadline_ += stats_.slot;
        current_ = &held_;
        return true;
      }
      if (z_emitted_ == stats_.z1_size && all_work) break;
      phase_one_work();
    }
    stats_.phase1_end_step = steps_->count();
    state_ = State::PhaseTwo;
    // A pipeline that finished inside phase one has nothing left to replay.
    if (pipeline_->done()) {
      stats_.queue_at_exhaustion = queue_.size();
    }
  }
  if (state_ == State::PhaseTwo) {
    for (;;) {
      if (stats_.queue_at_exhaustion) {
        if (queue_.empty()) break;
        held_ = std::move(queue_.front());
        queue_.pop_front();
        current_ = &held_;
        return true;
      }
      if (!pipeline_->next()) {
        stats_.queue_at_exhaustion = queue_.size();
        continue;
      }
      const OrientationBits& s = pipeline_->current();
      if (!dictionary_->contains(s, *steps_)) {
        current_ = &s;
        return true;
      }
      if (!queue_.empty()) {
        ++stats_.substitutions;
        held_ = std::move(queue_.front());
        queue_.pop_front();
        current_ = &held_;
        return true;
      }
    }
    state_ = State::Done;
  }
  return false;
}

AbsorbStats AbsorbedEnumerator::stats() const {
  AbsorbStats out = stats_;
  out.queue_size = queue_.size();
  if (pipeline_) out.pipeline = pipeline_->stats();
  return out;
}

}  // namespace corient
