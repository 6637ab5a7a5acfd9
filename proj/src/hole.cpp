#include "corient/hole.hpp"

#include <algorithm>

#include "corient/error.hpp"

namespace corient {

std::string_view to_string(HoleStrategy strategy) noexcept {
  switch (strategy) {
    case HoleStrategy::Exact: return "exact";
    case HoleStrategy::Fast: return "fast";
    case HoleStrategy::Amortized: return "amortized";
  }
  return "fast";
}

std::optional<HoleStrategy> parse_hole_strategy(std::string_view text) noexcept {
  if (text == "exact") return HoleStrategy::Exact;
  if (text == "fast") return HoleStrategy::Fast;
  if (text == "amortized") return HoleStrategy::Amortized;
  return std::nullopt;
}

Hole make_hole(const LabeledMultigraph& m, std::vector<MNode> nodes, std::vector<MEdge> edges) {
  Hole hole{std::move(nodes), std::move(edges), {}};
  const std::size_t h = hole.edges.size();
  hole.aligned.resize(h);
  for (std::size_t j = 0; j < h; ++j) {
    hole.aligned[j] = m.edge(hole.edges[j]).a == hole.nodes[j] ? 1 : 0;
  }
  return hole;
}

namespace {

struct Walk {
  std::vector<MNode> nodes;
  std::vector<MEdge> edges;
};

/// Cycle closed by the non-tree edge (x, y) in a BFS forest described by
/// dist/parent arrays: tree path up from x, edge, tree path up from y.
Walk close_cycle(std::span<const std::int32_t> dist, std::span<const MNode> parent,
                 std::span<const MEdge> parent_edge, MNode x, MNode y, MEdge e) {
  std::vector<MNode> up_x{x}, up_y{y};
  std::vector<MEdge> ex, ey;
  MNode a = x, b = y;
  while (dist[a] > dist[b]) {
    ex.push_back(parent_edge[a]);
    a = parent[a];
    up_x.push_back(a);
  }
  while (dist[b] > dist[a]) {
    ey.push_back(parent_edge[b]);
    b = parent[b];
    up_y.push_back(b);
  }
  while (a != b) {
    ex.push_back(parent_edge[a]);
    a = parent[a];
    up_x.push_back(a);
    ey.push_back(parent_edge[b]);
    b = parent[b];
    up_y.push_back(b);
  }
  Walk w;
  w.nodes.assign(up_x.rbegin(), up_x.rend());
  w.nodes.insert(w.nodes.end(), up_y.begin(), up_y.end() - 1);
  w.edges.assign(ex.rbegin(), ex.rend());
  w.edges.push_back(e);
  w.edges.insert(w.edges.end(), ey.begin(), ey.end());
  return w;
}

/// Rotates the cycle to start at its smallest node, then picks the direction
/// whose second node is smaller.
void normalize(Walk& w) {
  const std::size_t h = w.edges.size();
  if (h == 2) {
    if (w.nodes[0] > w.nodes[1]) std::swap(w.nodes[0], w.nodes[1]);
    if (w.edges[0] > w.edges[1]) std::swap(w.edges[0], w.edges[1]);
    return;
  }
  if (h < 3) return;
  const auto first = std::min_element(w.nodes.begin(), w.nodes.end()) - w.nodes.begin();
  std::rotate(w.nodes.begin(), w.nodes.begin() + first, w.nodes.end());
  std::rotate(w.edges.begin(), w.edges.begin() + first, w.edges.end());
  if (w.nodes[h - 1] < w.nodes[1]) {
    std::reverse(w.nodes.begin() + 1, w.nodes.end());
    std::reverse(w.edges.begin(), w.edges.end());
  }
}

}  // namespace

std::optional<Hole> shortest_cycle_through(const LabeledMultigraph& m, MNode u,
                                           StepCounter& steps) {
  const std::size_t n = m.node_count();
  std::vector<std::int32_t> dist(n, -1);
  std::vector<MNode> parent(n, kNone), branch(n, kNone);
  std::vector<MEdge> parent_edge(n, kNone);
  std::vector<MNode> queue{u};
  dist[u] = 0;
  branch[u] = u;

  std::size_t best = 0;
  MNode bx = kNone, by = kNone;
  MEdge be = kNone;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const MNode v = queue[head];
    steps.add();
    for (MEdge e : m.incident(v)) {
      steps.add();
      const MNode w = m.edge(e).other(v);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        parent_edge[w] = e;
        branch[w] = v == u ? w : branch[v];
        queue.push_back(w);
        continue;
      }
      if (e == parent_edge[v] || e == parent_edge[w]) continue;
      const bool through = (v == u && w == u) || branch[v] != branch[w];
      if (!through) continue;
      const std::size_t length = static_cast<std::size_t>(dist[v] + dist[w] + 1);
      if (best == 0 || length < best) {
        best = length;
        bx = v;
        by = w;
        be = e;
      }
    }
  }
  if (best == 0) return std::nullopt;
  Walk w = close_cycle(dist, parent, parent_edge, bx, by, be);
  normalize(w);
  return make_hole(m, std::move(w.nodes), std::move(w.edges));
}

void shortcut_chords(const LabeledMultigraph& m, Hole& hole, StepCounter& steps) {
  std::vector<std::int32_t> pos(m.node_count(), -1);
  std::vector<char> on_hole(m.edge_count(), 0);
  bool changed = true;
  while (changed && hole.size() >= 3) {
    changed = false;
    const std::size_t h = hole.size();
    for (std::size_t i = 0; i < h; ++i) pos[hole.nodes[i]] = static_cast<std::int32_t>(i);
    for (MEdge e : hole.edges) on_hole[e] = 1;

    std::vector<MNode> nodes;
    std::vector<MEdge> edges;
    for (std::size_t i = 0; i < h && !changed; ++i) {
      const MNode c = hole.nodes[i];
      for (MEdge f : m.incident(c)) {
        steps.add();
        if (on_hole[f]) continue;
        const MNode w = m.edge(f).other(c);
        if (w == c) {
          nodes = {c};
          edges = {f};
          changed = true;
          break;
        }
        if (pos[w] < 0) continue;
        const std::size_t k = static_cast<std::size_t>(pos[w]);
        const std::size_t d = (k + h - i) % h;
        // Sub-cycle c_i .. c_k closed by f, or c_k .. c_i closed by f.
        const std::size_t from = d + 1 <= h - d + 1 ? i : k;
        const std::size_t span = d + 1 <= h - d + 1 ? d : h - d;
        for (std::size_t t = 0; t < span; ++t) {
          nodes.push_back(hole.nodes[(from + t) % h]);
          edges.push_back(hole.edges[(from + t) % h]);
        }
        nodes.push_back(hole.nodes[(from + span) % h]);
        edges.push_back(f);
        changed = true;
        break;
      }
    }
    for (MNode v : hole.nodes) pos[v] = -1;
    for (MEdge e : hole.edges) on_hole[e] = 0;
    if (changed) {
      Walk w{std::move(nodes), std::move(edges)};
      normalize(w);
      hole = make_hole(m, std::move(w.nodes), std::move(w.edges));
    }
  }
}

bool is_chordless(const LabeledMultigraph& m, const Hole& hole) {
  if (hole.size() <= 2) return true;
  std::vector<char> on_node(m.node_count(), 0), on_edge(m.edge_count(), 0);
  for (MNode v : hole.nodes) on_node[v] = 1;
  for (MEdge e : hole.edges) on_edge[e] = 1;
  for (MEdge e = 0; e < m.edge_count(); ++e) {
    if (!on_edge[e] && on_node[m.edge(e).a] && on_node[m.edge(e).b]) return false;
  }
  return true;
}

HoleSearch::HoleSearch(const LabeledMultigraph& m, HoleStrategy strategy, StepCounter& steps)
    : m_(&m), strategy_(strategy), steps_(&steps) {
  const std::size_t n = m.node_count();
  dist_.assign(n, -1);
  parent_edge_.assign(n, kNone);
  parent_.assign(n, kNone);
  branch_.assign(n, kNone);
  if (strategy == HoleStrategy::Amortized) {
    if (n > 0) roots_.push_back(0);
  } else {
    roots_.resize(n);
    for (MNode v = 0; v < n; ++v) roots_[v] = v;
  }
}

void HoleSearch::consider(MNode root, MNode x, MNode y, MEdge e, std::size_t length) {
  (void)root;
  if (best_length_ != 0 && length >= best_length_) return;
  Walk w = close_cycle(dist_, parent_, parent_edge_, x, y, e);
  steps_->add(w.edges.size());
  best_length_ = w.edges.size();
  best_nodes_ = std::move(w.nodes);
  best_edges_ = std::move(w.edges);
}

void HoleSearch::bfs(MNode root, Mode mode) {
  queue_.clear();
  queue_.push_back(root);
  dist_[root] = 0;
  branch_[root] = root;
  bool stop = false;
  for (std::size_t head = 0; head < queue_.size() && !stop; ++head) {
    const MNode v = queue_[head];
    steps_->add();
    for (MEdge e : m_->incident(v)) {
      steps_->add();
      const MNode w = m_->edge(e).other(v);
      if (dist_[w] < 0) {
        dist_[w] = dist_[v] + 1;
        parent_[w] = v;
        parent_edge_[w] = e;
        branch_[w] = v == root ? w : branch_[v];
        queue_.push_back(w);
        continue;
      }
      if (e == parent_edge_[v] || e == parent_edge_[w]) continue;
      if (mode == Mode::ThroughRoot && !((v == root && w == root) || branch_[v] != branch_[w])) {
        continue;
      }
      consider(root, v, w, e, static_cast<std::size_t>(dist_[v] + dist_[w] + 1));
      if (mode == Mode::Truncated) {
        stop = true;
        break;
      }
    }
  }
  for (MNode v : queue_) {
    dist_[v] = -1;
    parent_[v] = kNone;
    parent_edge_[v] = kNone;
    branch_[v] = kNone;
  }
  steps_->add(queue_.size());
}

void HoleSearch::step() {
  if (done()) return;
  const MNode root = roots_[next_root_++];
  switch (strategy_) {
    case HoleStrategy::Exact: bfs(root, Mode::Full); break;
    case HoleStrategy::Fast: bfs(root, Mode::Truncated); break;
    case HoleStrategy::Amortized:
      if (next_root_ == 1) {
        bfs(root, Mode::ThroughRoot);
        std::vector<char> on_cycle(m_->node_count(), 0);
        for (MNode v : best_nodes_) on_cycle[v] = 1;
        for (MNode v = 0; v < m_->node_count(); ++v) {
          if (!on_cycle[v]) roots_.push_back(v);
        }
        steps_->add(m_->node_count());
      } else {
        bfs(root, Mode::Truncated);
      }
      break;
  }
  if (best_length_ == 1) next_root_ = roots_.size();
}

Hole HoleSearch::result() {
  while (!done()) step();
  if (best_length_ == 0) {
    throw Error(ErrorCode::AcyclicMultigraph, "multigraph has no cycle");
  }
  Walk w{best_nodes_, best_edges_};
  normalize(w);
  Hole hole = make_hole(*m_, std::move(w.nodes), std::move(w.edges));
  shortcut_chords(*m_, hole, *steps_);
  return hole;
}

Hole find_log_hole(const LabeledMultigraph& m, HoleStrategy strategy, StepCounter& steps) {
  HoleSearch search(m, strategy, steps);
  return search.result();
}

Hole find_log_hole(const LabeledMultigraph& m, HoleStrategy strategy) {
  StepCounter steps;
  return find_log_hole(m, strategy, steps);
}

LabeledMultigraph remove_hole(const LabeledMultigraph& m, const Hole& hole) {
  std::vector<char> on_hole(m.edge_count(), 0);
  for (MEdge e : hole.edges) on_hole[e] = 1;
  std::vector<MEdge> keep;
  keep.reserve(m.edge_count());
  for (MEdge e = 0; e < m.edge_count(); ++e) {
    if (!on_hole[e]) keep.push_back(e);
  }
  return m.subgraph(keep);
}

}  // namespace corient
