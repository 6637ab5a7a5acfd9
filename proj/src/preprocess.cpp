#include "corient/preprocess.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <tuple>

namespace corient {

std::vector<EdgeId> PrunedGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count);
  for (EdgeId e = 0; e < edge_alive.size(); ++e) {
    if (edge_alive[e]) out.push_back(e);
  }
  return out;
}

std::pair<PrunedGraph, DeadEndRecord> remove_dead_ends(const UndirectedGraph& g,
                                                       StepCounter& steps) {
  PrunedGraph pruned;
  DeadEndRecord record;
  pruned.edge_alive.assign(g.edge_count(), 1);
  pruned.degree.resize(g.node_count());
  pruned.edge_count = g.edge_count();

  std::deque<NodeId> queue;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    pruned.degree[v] = static_cast<std::uint32_t>(g.degree(v));
    if (pruned.degree[v] == 1) queue.push_back(v);
  }
  steps.add(g.node_count());

  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    if (pruned.degree[v] != 1) continue;
    for (EdgeId e : g.incident(v)) {
      steps.add();
      if (!pruned.edge_alive[e]) continue;
      const NodeId w = g.other(e, v);
      pruned.edge_alive[e] = 0;
      --pruned.edge_count;
      --pruned.degree[v];
      --pruned.degree[w];
      record.removed_edges.push_back(e);
      if (pruned.degree[w] == 1) queue.push_back(w);
      break;
    }
  }
  return {std::move(pruned), std::move(record)};
}

Shape classify_shape(const PrunedGraph& pruned) {
  if (pruned.empty()) return Shape::Empty;
  const bool all_two = std::all_of(pruned.degree.begin(), pruned.degree.end(),
                                   [](std::uint32_t d) { return d == 0 || d == 2; });
  return all_two ? Shape::PureCycle : Shape::General;
}

namespace {

struct ChainWalk {
  std::vector<EdgeId> edges;
  std::vector<NodeId> nodes;
};

/// Follows degree-2 nodes from `start` through `first` until a node of degree
/// != 2 (or `start` again) is reached.
ChainWalk walk_chain(const UndirectedGraph& g, const PrunedGraph& pruned, NodeId start,
                     EdgeId first, StepCounter& steps) {
  ChainWalk walk;
  walk.nodes.push_back(start);
  EdgeId e = first;
  NodeId cur = start;
  while (true) {
    walk.edges.push_back(e);
    cur = g.other(e, cur);
    walk.nodes.push_back(cur);
    steps.add();
    if (cur == start || pruned.degree[cur] != 2) break;
    EdgeId next = e;
    for (EdgeId f : g.incident(cur)) {
      steps.add();
      if (f != e && pruned.edge_alive[f]) {
        next = f;
        break;
      }
    }
    e = next;
  }
  return walk;
}

void reverse_walk(ChainWalk& walk) {
  std::reverse(walk.edges.begin(), walk.edges.end());
  std::reverse(walk.nodes.begin(), walk.nodes.end());
}

}  // namespace

LabeledMultigraph compress_chains(const UndirectedGraph& g, const PrunedGraph& pruned,
                                  StepCounter& steps) {
  std::vector<NodeId> hubs;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (pruned.degree[v] >= 3) hubs.push_back(v);
  }

  if (hubs.empty()) {
    if (pruned.empty()) return {};
    NodeId anchor = 0;
    while (pruned.degree[anchor] != 2) ++anchor;
    EdgeId first = kNone;
    for (EdgeId e : g.incident(anchor)) {
      if (pruned.edge_alive[e]) {
        first = e;
        break;
      }
    }
    ChainWalk walk = walk_chain(g, pruned, anchor, first, steps);
    ChainRecord chain{0, std::move(walk.edges), std::move(walk.nodes)};
    std::vector<MultiEdge> edges{MultiEdge{0, 0, EdgeLabel::Chain, 0}};
    std::vector<ChainRecord> chains;
    chains.push_back(std::move(chain));
    return LabeledMultigraph({anchor}, std::move(edges), std::move(chains));
  }

  std::vector<MNode> local(g.node_count(), kNone);
  for (MNode i = 0; i < hubs.size(); ++i) local[hubs[i]] = i;

  struct Pending {
    MultiEdge edge;
    EdgeId min_edge;
    ChainWalk walk;
  };
  std::vector<Pending> pending;
  std::vector<char> used(g.edge_count(), 0);

  for (NodeId x : hubs) {
    for (EdgeId e : g.incident(x)) {
      steps.add();
      if (!pruned.edge_alive[e] || used[e]) continue;
      ChainWalk walk = walk_chain(g, pruned, x, e, steps);
      for (EdgeId f : walk.edges) used[f] = 1;
      const NodeId y = walk.nodes.back();
      const EdgeId min_edge = *std::min_element(walk.edges.begin(), walk.edges.end());
      if (walk.edges.size() == 1) {
        const MNode a = local[std::min(x, y)];
        const MNode b = local[std::max(x, y)];
        pending.push_back({MultiEdge{a, b, EdgeLabel::Simple, e}, min_edge, {}});
        continue;
      }
      if (x == y ? walk.edges.front() > walk.edges.back() : x > y) reverse_walk(walk);
      const MNode a = local[walk.nodes.front()];
      const MNode b = local[walk.nodes.back()];
      pending.push_back({MultiEdge{a, b, EdgeLabel::Chain, 0}, min_edge, std::move(walk)});
    }
  }

  std::sort(pending.begin(), pending.end(), [](const Pending& p, const Pending& q) {
    auto key = [](const Pending& r) {
      return std::make_tuple(std::min(r.edge.a, r.edge.b), std::max(r.edge.a, r.edge.b),
                             r.min_edge);
    };
    return key(p) < key(q);
  });

  std::vector<MultiEdge> edges;
  std::vector<ChainRecord> chains;
  edges.reserve(pending.size());
  for (Pending& p : pending) {
    if (p.edge.label == EdgeLabel::Chain) {
      p.edge.payload = static_cast<std::uint32_t>(chains.size());
      chains.push_back(ChainRecord{static_cast<MEdge>(edges.size()), std::move(p.walk.edges),
                                   std::move(p.walk.nodes)});
    }
    edges.push_back(p.edge);
  }
  return LabeledMultigraph(std::move(hubs), std::move(edges), std::move(chains));
}

Reduction reduce(const UndirectedGraph& g, StepCounter& steps) {
  Reduction r;
  auto [pruned, dead_ends] = remove_dead_ends(g, steps);
  r.pruned = std::move(pruned);
  r.dead_ends = std::move(dead_ends);
  r.shape = classify_shape(r.pruned);
  if (r.shape != Shape::Empty) r.multigraph = compress_chains(g, r.pruned, steps);
  return r;
}

void write_multigraph(std::ostream& out, const UndirectedGraph& g, const LabeledMultigraph& m) {
  out << "# multigraph nodes=" << m.node_count() << " edges=" << m.edge_count() << '\n';
  for (const MultiEdge& e : m.edges()) {
    out << g.label(m.node_label(e.a)) << ' ' << g.label(m.node_label(e.b)) << ' ';
    if (e.label == EdgeLabel::Simple) {
      out << "simple 1\n";
    } else {
      out << "chain " << m.chains()[e.payload].length() << '\n';
    }
  }
}

}  // namespace corient
