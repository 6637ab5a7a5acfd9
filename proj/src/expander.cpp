#include "corient/expander.hpp"

#include <limits>

#include "corient/error.hpp"

namespace corient {

BrokenPatternCounter::BrokenPatternCounter(std::size_t h) : forward_(h, 0) {
  if (h < 2) {
    throw Error(ErrorCode::InvalidChainLength,
                "a chain needs at least 2 edges, got " + std::to_string(h));
  }
  reset();
}

void BrokenPatternCounter::reset() {
  std::fill(forward_.begin(), forward_.end(), 0);
  forward_[0] = 1;
  ones_ = 1;
}

void broken_chain_patterns(std::size_t h,
                           const std::function<void(std::span<const EdgeState>)>& sink) {
  BrokenPatternCounter counter(h);
  std::vector<EdgeState> states(h);
  do {
    for (std::size_t i = 0; i < h; ++i) {
      states[i] = counter.forward(i) ? EdgeState::Forward : EdgeState::Backward;
    }
    sink(states);
  } while (counter.advance([](std::size_t) {}));
}

ExpansionPlan::ExpansionPlan(const UndirectedGraph& g, const Reduction& reduction)
    : input_edges_(g.edge_count()), dead_ends_(reduction.dead_ends.removed_edges) {
  const LabeledMultigraph& m = reduction.multigraph;
  begin_.reserve(m.edge_count() + 1);
  begin_.push_back(0);
  chain_.reserve(m.edge_count());
  for (MEdge e = 0; e < m.edge_count(); ++e) {
    const MultiEdge& edge = m.edge(e);
    if (edge.label == EdgeLabel::Simple) {
      targets_.push_back(edge.payload);
      forward_bit_.push_back(m.node_label(edge.a) < m.node_label(edge.b) ? 1 : 0);
      chain_.push_back(0);
    } else {
      const ChainRecord& chain = m.chains()[edge.payload];
      for (std::size_t i = 0; i < chain.length(); ++i) {
        targets_.push_back(chain.path_edges[i]);
        forward_bit_.push_back(chain.path_nodes[i] < chain.path_nodes[i + 1] ? 1 : 0);
      }
      chain_.push_back(1);
    }
    begin_.push_back(targets_.size());
  }
}

ExpansionCursor::ExpansionCursor(const ExpansionPlan& plan, StepCounter& steps)
    : plan_(&plan), steps_(&steps), bits_(plan.input_edges()) {}

void ExpansionCursor::write_path_bit(MEdge e, std::size_t i, bool forward) {
  const bool bit = plan_->forward_bits(e)[i] != 0;
  bits_.set(plan_->targets(e)[i], forward ? bit : !bit);
}

void ExpansionCursor::reset(std::span<const EdgeState> states) {
  const auto offsets = plan_->offsets();
  const auto targets = plan_->all_targets();
  const auto forward_bits = plan_->all_forward_bits();
  broken_.clear();
  for (MEdge e = 0; e < states.size(); ++e) {
    const std::size_t begin = offsets[e];
    const std::size_t end = offsets[e + 1];
    if (states[e] == EdgeState::Broken) {
      const std::size_t h = end - begin;
      if (broken_.size() < patterns_.size() && patterns_[broken_.size()].length() == h) {
        patterns_[broken_.size()].reset();
      } else if (broken_.size() < patterns_.size()) {
        patterns_[broken_.size()] = BrokenPatternCounter(h);
      } else {
        patterns_.emplace_back(h);
      }
      broken_.push_back(e);
      for (std::size_t i = begin; i < end; ++i) {
        const bool bit = forward_bits[i] != 0;
        bits_.set(targets[i], i == begin ? bit : !bit);
      }
    } else {
      const bool flip = states[e] != EdgeState::Forward;
      for (std::size_t i = begin; i < end; ++i) {
        bits_.set(targets[i], (forward_bits[i] != 0) != flip);
      }
    }
  }
  for (EdgeId d : plan_->dead_end_edges()) bits_.set(d, false);
  steps_->add(plan_->input_edges() + states.size());
  first_ = true;
  exhausted_ = false;
}

bool ExpansionCursor::next() {
  if (exhausted_) return false;
  if (first_) {
    first_ = false;
    return true;
  }
  for (std::size_t k = 0; k < broken_.size(); ++k) {
    const MEdge e = broken_[k];
    BrokenPatternCounter& pattern = patterns_[k];
    const bool moved = pattern.advance([&](std::size_t i) {
      write_path_bit(e, i, pattern.forward(i));
      steps_->add();
    });
    if (moved) return true;
  }
  for (EdgeId d : plan_->dead_end_edges()) {
    steps_->add();
    bits_.flip(d);
    if (bits_.test(d)) return true;
  }
  exhausted_ = true;
  return false;
}

void expand_solution(const ExpansionPlan& plan, std::span<const EdgeState> states,
                     const std::function<void(const OrientationBits&)>& sink) {
  StepCounter steps;
  ExpansionCursor cursor(plan, steps);
  cursor.reset(states);
  while (cursor.next()) sink(cursor.current());
}

std::uint64_t expansion_count(const ExpansionPlan& plan, std::span<const EdgeState> states) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  auto times = [&](std::uint64_t f) { total = (f != 0 && total > kMax / f) ? kMax : total * f; };
  for (MEdge e = 0; e < states.size(); ++e) {
    if (states[e] != EdgeState::Broken) continue;
    const std::size_t h = plan.targets(e).size();
    times(h >= 64 ? kMax : (std::uint64_t{1} << h) - 2);
  }
  for (std::size_t i = 0; i < plan.dead_end_edges().size(); ++i) times(2);
  return total;
}

}  // namespace corient
