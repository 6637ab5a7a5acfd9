#include "corient/legal.hpp"

namespace corient {

std::vector<EdgeLabel> hole_labels(const LabeledMultigraph& m, const Hole& hole) {
  std::vector<EdgeLabel> labels;
  labels.reserve(hole.size());
  for (MEdge e : hole.edges) labels.push_back(m.edge(e).label);
  return labels;
}

ReachMatrix build_reach_matrix(const LabeledMultigraph& m_prime,
                               std::span<const EdgeState> states, const Hole& hole,
                               StepCounter& steps) {
  std::vector<Arc> arcs;
  extended_arcs(m_prime, states, arcs);
  Digraph graph;
  graph.assign(m_prime.node_count(), arcs);
  ReachBuilder builder;
  return builder.build(graph, hole.nodes, steps);
}

LegalOrientationCursor::LegalOrientationCursor(std::vector<EdgeLabel> labels, ReachMatrix base,
                                               StepCounter& steps)
    : labels_(std::move(labels)),
      frames_(labels_.size() + 1),
      states_(labels_.size(), EdgeState::Forward),
      steps_(&steps) {
  frames_[0].reach = std::move(base);
}

void LegalOrientationCursor::pop() {
  Frame& frame = frames_[static_cast<std::size_t>(depth_)];
  if (frame.emitted == 0) ++dead_end_calls_;
  if (depth_ > 0) frames_[static_cast<std::size_t>(depth_ - 1)].emitted += frame.emitted;
  --depth_;
  steps_->add();
}

bool LegalOrientationCursor::next() {
  if (finished_) return false;
  const std::size_t h = labels_.size();
  if (!started_) {
    started_ = true;
    depth_ = 0;
    calls_ = 1;
  } else {
    pop();  // the leaf that produced the previous emission
  }

  while (depth_ >= 0) {
    const auto k = static_cast<std::size_t>(depth_);
    Frame& frame = frames_[k];
    if (k == h) {
      frame.emitted = 1;
      return true;
    }
    if (frame.next_branch > 2) {
      pop();
      continue;
    }
    const std::uint8_t branch = frame.next_branch++;
    steps_->add();
    if (branch == 2 && labels_[k] != EdgeLabel::Chain) continue;

    Frame& child = frames_[k + 1];
    child.reach = frame.reach;
    const std::size_t here = k;
    const std::size_t there = (k + 1) % h;
    if (branch == 0) child.reach.add_arc(here, there, *steps_);
    if (branch == 1) child.reach.add_arc(there, here, *steps_);
    steps_->add(h);
    if (child.reach.is_cyclic() || child.reach.suffix_closable(k + 1, *steps_)) {
      states_[k] = static_cast<EdgeState>(branch);
      child.next_branch = 0;
      child.emitted = 0;
      ++depth_;
      ++calls_;
    }
  }
  finished_ = true;
  return false;
}

void legal_orientations(std::span<const EdgeLabel> labels, const ReachMatrix& base,
                        const HoleSink& sink) {
  StepCounter steps;
  LegalOrientationCursor cursor({labels.begin(), labels.end()}, base, steps);
  while (cursor.next()) sink(cursor.current());
}

MixedRadixCounter radix_counter(std::span<const EdgeLabel> labels) {
  std::vector<std::uint8_t> radices;
  radices.reserve(labels.size());
  for (EdgeLabel l : labels) radices.push_back(l == EdgeLabel::Chain ? 3 : 2);
  return MixedRadixCounter(std::move(radices));
}

void all_orientations_of_hole(std::span<const EdgeLabel> labels, const HoleSink& sink) {
  StepCounter steps;
  MixedRadixCounter counter = radix_counter(labels);
  std::vector<EdgeState> states(labels.size());
  while (counter.next(steps)) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      states[j] = static_cast<EdgeState>(counter.digits()[j]);
    }
    sink(states);
  }
}

}  // namespace corient
