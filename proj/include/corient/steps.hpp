#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace corient {

/**
 * @brief Deterministic clock counting elementary operations.
 *
 * All enumeration components charge their work here: one unit per edge scan,
 * node visit, bit written, counter digit touched or matrix word combined.
 * Delay and setup measurements are expressed in these units, not wall time.
 */
class StepCounter {
 public:
  void add(std::uint64_t k = 1) noexcept { count_ += k; }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_ = 0;
};

/// Records the step clock at each emission and summarizes the gaps.
class DelayProfile {
 public:
  explicit DelayProfile(std::uint64_t start = 0) : start_(start), last_(start) {}

  void record(std::uint64_t now) {
    if (emissions_ == 0) {
      first_ = now - start_;
    } else {
      const std::uint64_t gap = now - last_;
      max_gap_ = std::max(max_gap_, gap);
      gaps_.push_back(gap);
    }
    last_ = now;
    ++emissions_;
  }

  std::uint64_t emissions() const noexcept { return emissions_; }
  std::uint64_t first() const noexcept { return first_; }
  std::uint64_t max_gap() const noexcept { return max_gap_; }

  std::uint64_t median_gap() const {
    if (gaps_.empty()) return 0;
    std::vector<std::uint64_t> sorted = gaps_;
    auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
    std::nth_element(sorted.begin(), mid, sorted.end());
    return *mid;
  }

 private:
  std::uint64_t start_;
  std::uint64_t last_;
  std::uint64_t emissions_ = 0;
  std::uint64_t first_ = 0;
  std::uint64_t max_gap_ = 0;
  std::vector<std::uint64_t> gaps_;
};

}  // namespace corient
