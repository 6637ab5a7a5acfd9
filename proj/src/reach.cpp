#include "corient/reach.hpp"

#include <algorithm>
#include <bit>

namespace corient {

void ReachMatrix::add_arc(std::size_t u, std::size_t v, StepCounter& steps) {
  if (u == v || get(v, u)) cyclic_ = true;
  if (words_ == 1) {
    const std::uint64_t add = bits_[v] | (std::uint64_t{1} << v);
    std::uint64_t preds = std::uint64_t{1} << u;
    for (std::size_t x = 0; x < size_; ++x) preds |= ((bits_[x] >> u) & 1U) << x;
    for (std::uint64_t p = preds; p != 0; p &= p - 1) bits_[std::countr_zero(p)] |= add;
    steps.add(size_ + static_cast<std::uint64_t>(std::popcount(preds)));
    return;
  }
  std::vector<std::uint64_t> add(bits_.begin() + static_cast<std::ptrdiff_t>(v * words_),
                                 bits_.begin() + static_cast<std::ptrdiff_t>((v + 1) * words_));
  add[v >> 6] |= std::uint64_t{1} << (v & 63);
  // Predecessors are read from column u before any row changes.
  std::vector<std::size_t> preds;
  for (std::size_t x = 0; x < size_; ++x) {
    if (x == u || get(x, u)) preds.push_back(x);
  }
  for (std::size_t x : preds) {
    std::uint64_t* row = bits_.data() + x * words_;
    for (std::size_t w = 0; w < words_; ++w) row[w] |= add[w];
  }
  steps.add(size_ + preds.size() * words_);
}

bool ReachMatrix::suffix_closable(std::size_t decided, StepCounter& steps) const {
  steps.add(size_);
  if (words_ == 1) {
    std::uint64_t mask = 1U;
    for (std::size_t i = decided; i < size_; ++i) mask |= std::uint64_t{1} << i;
    for (std::uint64_t f = mask; f != 0; f &= f - 1) {
      const int i = std::countr_zero(f);
      if ((bits_[static_cast<std::size_t>(i)] & mask & ~(std::uint64_t{1} << i)) != 0) return true;
    }
    return false;
  }
  std::vector<std::uint64_t> mask(words_, 0);
  for (std::size_t i = decided; i < size_; ++i) mask[i >> 6] |= std::uint64_t{1} << (i & 63);
  mask[0] |= 1U;
  auto probe = [&](std::size_t f) {
    const std::uint64_t* row = bits_.data() + f * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t hits = row[w] & mask[w];
      if (w == (f >> 6)) hits &= ~(std::uint64_t{1} << (f & 63));
      if (hits != 0) return true;
    }
    return false;
  };
  if (probe(0)) return true;
  for (std::size_t f = decided; f < size_; ++f) {
    steps.add(words_);
    if (f != 0 && probe(f)) return true;
  }
  return false;
}

ReachMatrix reach_update(const ReachMatrix& r, std::size_t u, std::size_t v) {
  ReachMatrix out = r;
  StepCounter steps;
  out.add_arc(u, v, steps);
  return out;
}

bool reach_is_cyclic(const ReachMatrix& r) { return r.is_cyclic(); }

bool suffix_closable(const ReachMatrix& r, std::size_t decided) {
  StepCounter steps;
  return r.suffix_closable(decided, steps);
}

ReachMatrix ReachBuilder::build(const Digraph& graph, std::span<const NodeId> nodes,
                                StepCounter& steps) {
  const std::size_t n = graph.node_count();
  if (index_.size() < n) {
    index_.resize(n, -1);
    stamp_.resize(n, 0);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) index_[nodes[i]] = static_cast<std::int32_t>(i);

  ReachMatrix r(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    queue_.clear();
    // Seed with out-neighbours so that only paths of length >= 1 count.
    for (NodeId w : graph.out(nodes[i])) {
      steps.add();
      if (stamp_[w] != generation_) {
        stamp_[w] = generation_;
        queue_.push_back(w);
      }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId x = queue_[head];
      steps.add();
      if (index_[x] >= 0) r.set(i, static_cast<std::size_t>(index_[x]));
      for (NodeId w : graph.out(x)) {
        steps.add();
        if (stamp_[w] != generation_) {
          stamp_[w] = generation_;
          queue_.push_back(w);
        }
      }
    }
  }
  for (NodeId v : nodes) index_[v] = -1;
  return r;
}

}  // namespace corient
