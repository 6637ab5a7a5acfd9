#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "corient/bits.hpp"
#include "corient/steps.hpp"

namespace corient {

/// Binary trie over fixed-length bit strings. Each operation walks at most
/// `length` nodes.
class BitstringTrie {
 public:
  explicit BitstringTrie(std::size_t length) : length_(length), children_(1, {kAbsent, kAbsent}) {}

  /// Returns true if the string was not present before.
  bool insert(const OrientationBits& bits, StepCounter& steps) {
    std::uint32_t node = 0;
    bool created = false;
    for (std::size_t i = 0; i < length_; ++i) {
      const unsigned b = bits.test(i) ? 1U : 0U;
      if (children_[node][b] == kAbsent) {
        children_[node][b] = static_cast<std::uint32_t>(children_.size());
        children_.push_back({kAbsent, kAbsent});
        created = true;
      }
      node = children_[node][b];
    }
    steps.add(length_);
    if (created || (length_ == 0 && size_ == 0)) {
      ++size_;
      return true;
    }
    return false;
  }

  bool contains(const OrientationBits& bits, StepCounter& steps) const {
    std::uint32_t node = 0;
    for (std::size_t i = 0; i < length_; ++i) {
      steps.add();
      node = children_[node][bits.test(i) ? 1 : 0];
      if (node == kAbsent) return false;
    }
    return length_ > 0 || size_ > 0;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t node_count() const noexcept { return children_.size(); }
  std::size_t memory_bits() const noexcept { return children_.size() * 64; }

 private:
  static constexpr std::uint32_t kAbsent = 0;  // the root is never a child

  std::size_t length_;
  std::vector<std::array<std::uint32_t, 2>> children_;
  std::size_t size_ = 0;
};

}  // namespace corient
