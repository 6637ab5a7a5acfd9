#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "corient/graph.hpp"
#include "corient/steps.hpp"

namespace corient {

using MNode = std::uint32_t;
using MEdge = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

enum class EdgeLabel : std::uint8_t { Simple, Chain };

/// State of one multigraph edge. Forward on edge (a, b) is the arc a -> b.
enum class EdgeState : std::uint8_t { Forward = 0, Backward = 1, Broken = 2 };

/// Per-edge states, indexed like the edges of the multigraph they describe.
using ExtendedOrientation = std::vector<EdgeState>;

/**
 * @brief A maximal path of degree-2 nodes of the pruned graph, collapsed to
 * one multigraph edge.
 *
 * Forward on the chain edge means the directed path
 * path_nodes[0] -> path_nodes[1] -> ... -> path_nodes.back(). path_edges[i]
 * joins path_nodes[i] and path_nodes[i + 1]. For a chain self-loop the first
 * and last node coincide and the two directions are the two rotations.
 */
struct ChainRecord {
  MEdge multigraph_edge = kNone;
  std::vector<EdgeId> path_edges;
  std::vector<NodeId> path_nodes;

  std::size_t length() const noexcept { return path_edges.size(); }
};

struct MultiEdge {
  MNode a;
  MNode b;
  EdgeLabel label;
  /// Index into chains() for chain edges, G edge id for simple edges.
  std::uint32_t payload;

  bool is_loop() const noexcept { return a == b; }
  MNode other(MNode v) const noexcept { return a == v ? b : a; }
};

/**
 * @brief Labeled multigraph M: nodes are a subset of the input graph's nodes,
 * edges are simple or chain, self-loops and parallel edges are allowed.
 *
 * Node ids are dense (0..node_count-1) and increase with the input-graph id
 * they stand for. A self-loop appears once in the incidence list of its node.
 */
class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;
  LabeledMultigraph(std::vector<NodeId> node_labels, std::vector<MultiEdge> edges,
                    std::vector<ChainRecord> chains);

  std::size_t node_count() const noexcept { return node_labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Input-graph node represented by multigraph node v.
  NodeId node_label(MNode v) const noexcept { return node_labels_[v]; }
  std::span<const NodeId> node_labels() const noexcept { return node_labels_; }

  std::span<const MultiEdge> edges() const noexcept { return edges_; }
  const MultiEdge& edge(MEdge e) const noexcept { return edges_[e]; }
  std::span<const ChainRecord> chains() const noexcept { return chains_; }
  const ChainRecord& chain_of(MEdge e) const noexcept { return chains_[edges_[e].payload]; }
  bool is_chain(MEdge e) const noexcept { return edges_[e].label == EdgeLabel::Chain; }

  std::span<const MEdge> incident(MNode v) const noexcept {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  /// Degree with self-loops counted twice.
  std::size_t degree(MNode v) const noexcept;

  /// For sub-multigraphs: id of each edge in the multigraph this one was cut
  /// from. Identity for a multigraph built directly.
  std::span<const MEdge> parent_edges() const noexcept { return parent_edges_; }

  /// Copy containing only the listed edges (same node set).
  LabeledMultigraph subgraph(std::span<const MEdge> keep) const;

 private:
  std::vector<NodeId> node_labels_;
  std::vector<MultiEdge> edges_;
  std::vector<ChainRecord> chains_;
  std::vector<std::size_t> offsets_{0};
  std::vector<MEdge> incident_;
  std::vector<MEdge> parent_edges_;
};

/// Arcs of the non-broken edges of an extended orientation.
void extended_arcs(const LabeledMultigraph& m, std::span<const EdgeState> states,
                   std::vector<Arc>& arcs);

/// True iff the Forward/Backward arcs contain a directed cycle. Broken edges
/// are ignored, a directed self-loop is a cycle.
bool extended_is_cyclic(const LabeledMultigraph& m, std::span<const EdgeState> states);

}  // namespace corient
