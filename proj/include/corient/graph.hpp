#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "corient/bits.hpp"
#include "corient/steps.hpp"

namespace corient {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId from;
  NodeId to;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/**
 * @brief Simple undirected graph with dense node ids and canonically ordered
 * edges (sorted by (min endpoint, max endpoint)).
 *
 * Immutable after construction.
 */
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Builds a graph on nodes 0..node_count-1. Rejects self-loops, duplicate
  /// edges and out-of-range endpoints. Edges are reordered canonically.
  static UndirectedGraph from_edges(std::size_t node_count,
                                    std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }

  /// Edge ids incident to v, in increasing order.
  std::span<const EdgeId> incident(NodeId v) const noexcept {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }

  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  NodeId other(EdgeId e, NodeId v) const noexcept {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const noexcept;

  bool is_connected() const;

  /// External label of node v (the id used in the input file).
  std::uint64_t label(NodeId v) const noexcept { return labels_.empty() ? v : labels_[v]; }
  void set_labels(std::vector<std::uint64_t> labels);

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incident_;
  std::vector<std::uint64_t> labels_;
};

struct ParseOptions {
  /// Reject disconnected input with ErrorCode::Disconnected.
  bool strict_connected = false;
};

/**
 * @brief Reads an edge list: one "u v" pair of non-negative integers per line.
 *
 * Lines starting with '#' or 'c' are comments and blank lines are ignored. A
 * DIMACS-like header "p edge n m" is validated against the body, and edge lines
 * may then use the "e u v" form. Node labels are mapped to dense ids in
 * increasing label order; the labels are kept on the graph.
 */
UndirectedGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
UndirectedGraph parse_edge_list(std::string_view text, const ParseOptions& options = {});

/// Compressed out-adjacency of a directed multigraph, reusable across calls.
class Digraph {
 public:
  void assign(std::size_t node_count, std::span<const Arc> arcs);

  std::size_t node_count() const noexcept { return node_count_; }
  std::span<const NodeId> out(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> fill_;
  std::vector<NodeId> targets_;
};

/// Three-color depth-first cycle search with buffers kept between calls.
class CycleDetector {
 public:
  bool has_cycle(const Digraph& graph, StepCounter& steps);
  bool has_cycle(std::size_t node_count, std::span<const Arc> arcs, StepCounter& steps);

 private:
  Digraph scratch_;
  std::vector<std::uint8_t> color_;
  std::vector<std::pair<NodeId, std::size_t>> stack_;
};

/// True iff the digraph on nodes 0..n-1 contains a directed cycle.
bool digraph_has_cycle(std::size_t node_count, std::span<const Arc> arcs);

/// Encodes a direction assignment. Every edge of g must be covered by exactly
/// one arc; otherwise ErrorCode::IncompleteAssignment is thrown.
OrientationBits canonical_bits(const UndirectedGraph& g, std::span<const Arc> assignment);

/// Inverse of canonical_bits: arcs listed in canonical edge order.
std::vector<Arc> orientation_arcs(const UndirectedGraph& g, const OrientationBits& bits);

}  // namespace corient
