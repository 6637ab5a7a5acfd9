#include "corient/multigraph.hpp"

namespace corient {

LabeledMultigraph::LabeledMultigraph(std::vector<NodeId> node_labels,
                                     std::vector<MultiEdge> edges,
                                     std::vector<ChainRecord> chains)
    : node_labels_(std::move(node_labels)), edges_(std::move(edges)), chains_(std::move(chains)) {
  const std::size_t n = node_labels_.size();
  offsets_.assign(n + 1, 0);
  for (const MultiEdge& e : edges_) {
    ++offsets_[e.a + 1];
    if (!e.is_loop()) ++offsets_[e.b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  incident_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (MEdge e = 0; e < edges_.size(); ++e) {
    incident_[fill[edges_[e].a]++] = e;
    if (!edges_[e].is_loop()) incident_[fill[edges_[e].b]++] = e;
  }
  parent_edges_.resize(edges_.size());
  for (MEdge e = 0; e < edges_.size(); ++e) parent_edges_[e] = e;
}

std::size_t LabeledMultigraph::degree(MNode v) const noexcept {
  std::size_t d = 0;
  for (MEdge e : incident(v)) d += edges_[e].is_loop() ? 2 : 1;
  return d;
}

LabeledMultigraph LabeledMultigraph::subgraph(std::span<const MEdge> keep) const {
  std::vector<MultiEdge> edges;
  std::vector<ChainRecord> chains;
  edges.reserve(keep.size());
  for (MEdge e : keep) {
    MultiEdge copy = edges_[e];
    if (copy.label == EdgeLabel::Chain) {
      chains.push_back(chains_[copy.payload]);
      chains.back().multigraph_edge = static_cast<MEdge>(edges.size());
      copy.payload = static_cast<std::uint32_t>(chains.size() - 1);
    }
    edges.push_back(copy);
  }
  LabeledMultigraph sub(node_labels_, std::move(edges), std::move(chains));
  for (std::size_t i = 0; i < keep.size(); ++i) sub.parent_edges_[i] = parent_edges_[keep[i]];
  return sub;
}

void extended_arcs(const LabeledMultigraph& m, std::span<const EdgeState> states,
                   std::vector<Arc>& arcs) {
  arcs.clear();
  for (MEdge e = 0; e < m.edge_count(); ++e) {
    const MultiEdge& edge = m.edge(e);
    switch (states[e]) {
      case EdgeState::Forward: arcs.push_back({edge.a, edge.b}); break;
      case EdgeState::Backward: arcs.push_back({edge.b, edge.a}); break;
      case EdgeState::Broken: break;
    }
  }
}

bool extended_is_cyclic(const LabeledMultigraph& m, std::span<const EdgeState> states) {
  std::vector<Arc> arcs;
  extended_arcs(m, states, arcs);
  CycleDetector detector;
  StepCounter steps;
  return detector.has_cycle(m.node_count(), arcs, steps);
}

}  // namespace corient
