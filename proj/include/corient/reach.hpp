#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "corient/graph.hpp"
#include "corient/steps.hpp"

namespace corient {

/**
 * @brief Reachability among the h nodes of a hole, one bit row per node.
 *
 * Only ever gains bits. A set diagonal bit means some hole node lies on a
 * directed cycle; add_arc folds mutual reachability into the diagonal.
 */
class ReachMatrix {
 public:
  ReachMatrix() = default;
  explicit ReachMatrix(std::size_t size)
      : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t u, std::size_t v) const noexcept {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  void set(std::size_t u, std::size_t v) noexcept {
    bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    if (u == v) cyclic_ = true;
  }

  /// Adds the arc u -> v: v and everything v reaches become reachable from u
  /// and from everything reaching u.
  void add_arc(std::size_t u, std::size_t v, StepCounter& steps);

  bool is_cyclic() const noexcept { return cyclic_; }

  /// With the first `decided` hole edges placed, whether two distinct nodes of
  /// {c_decided, ..., c_{h-1}, c_0} are joined by reachability in either
  /// direction, so that the remaining edges can still close a cycle.
  bool suffix_closable(std::size_t decided, StepCounter& steps) const;

  friend bool operator==(const ReachMatrix& a, const ReachMatrix& b) {
    return a.size_ == b.size_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  bool cyclic_ = false;
};

ReachMatrix reach_update(const ReachMatrix& r, std::size_t u, std::size_t v);
bool reach_is_cyclic(const ReachMatrix& r);
bool suffix_closable(const ReachMatrix& r, std::size_t decided);

/// Proper-path reachability between the listed nodes of a digraph, one BFS per
/// node. Buffers are kept between calls.
class ReachBuilder {
 public:
  ReachMatrix build(const Digraph& graph, std::span<const NodeId> nodes, StepCounter& steps);

 private:
  std::vector<std::int32_t> index_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::vector<NodeId> queue_;
};

}  // namespace corient
