#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corient {

/**
 * @brief One orientation of an input graph, packed as a bit vector over the
 * canonical edge order.
 *
 * Bit i set means edge i is directed from its smaller endpoint to its larger
 * one. Ordering is lexicographic on the bit sequence b_0 b_1 ... b_{m-1}.
 */
class OrientationBits {
 public:
  OrientationBits() = default;
  explicit OrientationBits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  /// Parses a string over {0,1}; character i becomes bit i.
  static OrientationBits from_string(std::string_view text);

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const OrientationBits&, const OrientationBits&) = default;

  friend std::strong_ordering operator<=>(const OrientationBits& a, const OrientationBits& b) {
    const std::size_t common = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < common; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const int bit = std::countr_zero(diff);
        return ((a.words_[w] >> bit) & 1U) ? std::strong_ordering::greater
                                            : std::strong_ordering::less;
      }
    }
    return a.size_ <=> b.size_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace corient

template <>
struct std::hash<corient::OrientationBits> {
  std::size_t operator()(const corient::OrientationBits& bits) const noexcept {
    std::size_t h = bits.size();
    for (std::uint64_t w : bits.words()) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
