#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "corient/multigraph.hpp"
#include "corient/steps.hpp"

namespace corient {

enum class HoleStrategy {
  Exact,      // full BFS from every node: a girth cycle, O(|V_M| |E_M|)
  Fast,       // BFS from every node stopped at the first non-tree edge, O(|V_M|^2)
  Amortized,  // shortest cycle through one node, then truncated BFS from the rest
};

std::string_view to_string(HoleStrategy strategy) noexcept;
std::optional<HoleStrategy> parse_hole_strategy(std::string_view text) noexcept;

/**
 * @brief A chordless cycle c_0 .. c_{h-1} of the multigraph.
 *
 * edges[j] joins nodes[j] and nodes[(j + 1) % h]; aligned[j] is set when that
 * edge's own Forward direction is nodes[j] -> nodes[j + 1]. h == 1 is a
 * self-loop, h == 2 a parallel pair.
 */
struct Hole {
  std::vector<MNode> nodes;
  std::vector<MEdge> edges;
  std::vector<char> aligned;

  std::size_t size() const noexcept { return edges.size(); }
};

/// Builds a hole from a closed walk, filling in the alignment flags.
Hole make_hole(const LabeledMultigraph& m, std::vector<MNode> nodes, std::vector<MEdge> edges);

/// Shortest cycle through u (one BFS). The result is chordless.
std::optional<Hole> shortest_cycle_through(const LabeledMultigraph& m, MNode u,
                                           StepCounter& steps);

/// Replaces the hole by a shorter sub-cycle while a chord exists. Holes of
/// length <= 2 are left alone.
void shortcut_chords(const LabeledMultigraph& m, Hole& hole, StepCounter& steps);

bool is_chordless(const LabeledMultigraph& m, const Hole& hole);

/// Resumable hole search: each step() runs one breadth-first search.
class HoleSearch {
 public:
  HoleSearch(const LabeledMultigraph& m, HoleStrategy strategy, StepCounter& steps);

  bool done() const noexcept { return next_root_ >= roots_.size(); }
  void step();

  /// Chordless, normalized hole. Throws ErrorCode::AcyclicMultigraph when the
  /// multigraph has no cycle.
  Hole result();

 private:
  enum class Mode { Full, Truncated, ThroughRoot };

  void bfs(MNode root, Mode mode);
  void consider(MNode root, MNode x, MNode y, MEdge e, std::size_t length);

  const LabeledMultigraph* m_;
  HoleStrategy strategy_;
  StepCounter* steps_;
  std::vector<MNode> roots_;
  std::size_t next_root_ = 0;

  std::vector<std::int32_t> dist_;
  std::vector<MEdge> parent_edge_;
  std::vector<MNode> parent_;
  std::vector<MNode> branch_;
  std::vector<MNode> queue_;

  std::size_t best_length_ = 0;
  std::vector<MNode> best_nodes_;
  std::vector<MEdge> best_edges_;
};

Hole find_log_hole(const LabeledMultigraph& m, HoleStrategy strategy, StepCounter& steps);
Hole find_log_hole(const LabeledMultigraph& m, HoleStrategy strategy = HoleStrategy::Fast);

/// M' = M without the hole's edges; node set unchanged.
LabeledMultigraph remove_hole(const LabeledMultigraph& m, const Hole& hole);

}  // namespace corient
