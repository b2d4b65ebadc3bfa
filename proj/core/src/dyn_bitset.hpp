#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace shallow::detail {

// Fixed-width bitset sized at runtime; used for candidate domains.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static DynBitset full(std::size_t bits) {
    DynBitset b(bits);
    for (std::size_t i = 0; i < bits; ++i) b.set(i);
    return b;
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t size() const { return bits_; }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  int count_and(const DynBitset& o) const {
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  template <typename Fn>
  void for_each_and(const DynBitset& o, Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w] & o.words_[w];
      while (bits != 0) {
        fn(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  bool operator==(const DynBitset&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace shallow::detail
