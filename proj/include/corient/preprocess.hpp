#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "corient/graph.hpp"
#include "corient/multigraph.hpp"
#include "corient/steps.hpp"

namespace corient {

/// Pendant edges removed while pruning, in removal order.
struct DeadEndRecord {
  std::vector<EdgeId> removed_edges;
};

/// Subgraph of the input left after dead-end removal.
struct PrunedGraph {
  std::vector<char> edge_alive;
  std::vector<std::uint32_t> degree;
  std::size_t edge_count = 0;

  bool empty() const noexcept { return edge_count == 0; }
  std::vector<EdgeId> edges() const;
};

enum class Shape {
  Empty,      // the input is a tree: no cyclic orientation
  PureCycle,  // a single cycle, possibly with trees hanging off it
  General,    // some node of degree >= 3 survives pruning
};

/// Removes degree-1 nodes until none is left. The fixpoint does not depend on
/// the removal schedule; a queue is used.
std::pair<PrunedGraph, DeadEndRecord> remove_dead_ends(const UndirectedGraph& g,
                                                       StepCounter& steps);

Shape classify_shape(const PrunedGraph& pruned);

/**
 * @brief Collapses every maximal path of degree-2 nodes into one chain edge.
 *
 * Edges of the result are sorted by (min endpoint, max endpoint, smallest
 * input edge id on the path). A chain between distinct nodes runs forward
 * from the endpoint with the smaller input id; a chain self-loop runs forward
 * in the sense whose first path edge has the smaller id.
 *
 * When no node has degree >= 3 (PureCycle), the result is a single node, the
 * smallest id on the cycle, carrying one chain self-loop.
 */
LabeledMultigraph compress_chains(const UndirectedGraph& g, const PrunedGraph& pruned,
                                  StepCounter& steps);

/// Everything needed to enumerate on M and map solutions back to the input.
struct Reduction {
  Shape shape = Shape::Empty;
  PrunedGraph pruned;
  DeadEndRecord dead_ends;
  LabeledMultigraph multigraph;
};

Reduction reduce(const UndirectedGraph& g, StepCounter& steps);

/// Debug dump: one line per multigraph edge, "u v simple 1" or "u v chain h",
/// endpoints printed as input labels.
void write_multigraph(std::ostream& out, const UndirectedGraph& g, const LabeledMultigraph& m);

}  // namespace corient
