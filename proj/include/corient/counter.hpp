#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "corient/steps.hpp"

namespace corient {

/// Odometer over digits with individual radices; digit 0 moves fastest.
class MixedRadixCounter {
 public:
  MixedRadixCounter() = default;
  explicit MixedRadixCounter(std::vector<std::uint8_t> radices)
      : radices_(std::move(radices)), digits_(radices_.size(), 0) {}

  /// The first call yields the all-zero value; every later call advances by
  /// one. Returns false once all values have been produced.
  bool next(StepCounter& steps) {
    if (exhausted_) return false;
    if (!started_) {
      started_ = true;
      changed_ = digits_.size();
      steps.add(1 + digits_.size());
      return true;
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      steps.add();
      if (++digits_[i] < radices_[i]) {
        changed_ = i + 1;
        return true;
      }
      digits_[i] = 0;
    }
    exhausted_ = true;
    changed_ = digits_.size();
    return false;
  }

  std::span<const std::uint8_t> digits() const noexcept { return digits_; }
  /// Digits [0, changed()) may differ from the previous value.
  std::size_t changed() const noexcept { return changed_; }

 private:
  std::vector<std::uint8_t> radices_;
  std::vector<std::uint8_t> digits_;
  std::size_t changed_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
};

}  // namespace corient
