#include "corient/enumerator.hpp"

namespace corient {

namespace {

std::vector<EdgeLabel> edge_labels(const LabeledMultigraph& m) {
  std::vector<EdgeLabel> labels;
  labels.reserve(m.edge_count());
  for (const MultiEdge& e : m.edges()) labels.push_back(e.label);
  return labels;
}

EdgeState flip(EdgeState s) {
  switch (s) {
    case EdgeState::Forward: return EdgeState::Backward;
    case EdgeState::Backward: return EdgeState::Forward;
    case EdgeState::Broken: return EdgeState::Broken;
  }
  return s;
}

}  // namespace

void extended_orientations_stream(const LabeledMultigraph& m, const OrientationSink& sink) {
  StepCounter steps;
  const auto labels = edge_labels(m);
  MixedRadixCounter counter = radix_counter(labels);
  ExtendedOrientation states(m.edge_count());
  while (counter.next(steps)) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      states[i] = static_cast<EdgeState>(counter.digits()[i]);
    }
    sink(states);
  }
}

ExtendedCyclicCursor::ExtendedCyclicCursor(const LabeledMultigraph& m, Hole hole,
                                           StepCounter& steps)
    : m_(&m),
      hole_(std::move(hole)),
      m_prime_(remove_hole(m, hole_)),
      hole_labels_(hole_labels(m, hole_)),
      outer_(radix_counter(edge_labels(m_prime_))),
      prime_states_(m_prime_.edge_count(), EdgeState::Forward),
      current_(m.edge_count(), EdgeState::Forward),
      hole_scratch_(hole_.size()),
      steps_(&steps) {
  steps.add(m.edge_count() + m.node_count());
}

EnumeratorCounters ExtendedCyclicCursor::counters() const {
  EnumeratorCounters c = finished_;
  if (legal_) {
    c.legal_calls += legal_->calls();
    c.dead_end_calls += legal_->dead_end_calls();
  }
  return c;
}

void ExtendedCyclicCursor::write_hole(std::span<const EdgeState> hole_states) {
  for (std::size_t j = 0; j < hole_.size(); ++j) {
    const EdgeState s = hole_states[j];
    current_[hole_.edges[j]] = hole_.aligned[j] ? s : flip(s);
  }
  steps_->add(hole_.size());
}

void ExtendedCyclicCursor::load_next_m_prime() {
  const auto digits = outer_.digits();
  const auto parents = m_prime_.parent_edges();
  for (std::size_t i = 0; i < outer_.changed(); ++i) {
    prime_states_[i] = static_cast<EdgeState>(digits[i]);
    current_[parents[i]] = prime_states_[i];
  }
  steps_->add(outer_.changed());
  ++finished_.m_prime_assignments;

  extended_arcs(m_prime_, prime_states_, arcs_);
  digraph_.assign(m_prime_.node_count(), arcs_);
  steps_->add(m_prime_.edge_count() + m_prime_.node_count());
  if (detector_.has_cycle(digraph_, *steps_)) {
    ++finished_.m_prime_cyclic;
    all_ = radix_counter(hole_labels_);
    inner_ = Inner::All;
    return;
  }
  ReachMatrix base = reach_builder_.build(digraph_, hole_.nodes, *steps_);
  if (legal_) {
    finished_.legal_calls += legal_->calls();
    finished_.dead_end_calls += legal_->dead_end_calls();
  }
  legal_.emplace(hole_labels_, std::move(base), *steps_);
  inner_ = Inner::Legal;
}

bool ExtendedCyclicCursor::next() {
  while (true) {
    if (inner_ == Inner::All && all_.next(*steps_)) {
      const auto digits = all_.digits();
      for (std::size_t j = 0; j < hole_.size(); ++j) {
        hole_scratch_[j] = static_cast<EdgeState>(digits[j]);
      }
      write_hole(hole_scratch_);
      return true;
    }
    if (inner_ == Inner::Legal && legal_->next()) {
      write_hole(legal_->current());
      return true;
    }
    if (!outer_.next(*steps_)) {
      inner_ = Inner::None;
      return false;
    }
    load_next_m_prime();
  }
}

void enumerate_extended_cyclic(const LabeledMultigraph& m, const Hole& hole,
                               const OrientationSink& sink) {
  StepCounter steps;
  ExtendedCyclicCursor cursor(m, hole, steps);
  while (cursor.next()) sink(cursor.current());
}

}  // namespace corient
