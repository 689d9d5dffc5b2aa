#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace godp::detail {

// Fixed-size bit set sized at runtime; the saturation tables are rows of
// these.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  // Returns true if the bit was not yet set.
  bool set(std::size_t i) {
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    std::uint64_t& w = words_[i / 64];
    if (w & mask) return false;
    w |= mask;
    return true;
  }

  // this |= other; returns the number of newly set bits.
  std::size_t merge(const Bitset& other) {
    std::size_t added = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t fresh = other.words_[k] & ~words_[k];
      if (fresh) {
        added += static_cast<std::size_t>(std::popcount(fresh));
        words_[k] |= fresh;
      }
    }
    return added;
  }

  // Calls fn(i) for every set bit, in increasing order.
  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        fn(k * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace godp::detail
