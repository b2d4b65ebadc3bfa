#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace shallow {

inline constexpr int kMaxSetVertices = 64;

/// Fixed-capacity vertex set over vertices 0..63, stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t bits_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from_vector(const std::vector<int>& vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  /// Least vertex; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{0,1,4}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographic on the sorted vertex lists.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // The least differing vertex belongs to the lexicographically smaller list.
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

/// Calls fn(VertexSet) for every subset of `universe` with exactly k elements,
/// in canonical (lexicographic) order. Stops early if fn returns false.
template <typename Fn>
bool for_each_subset_of_size(VertexSet universe, int k, Fn&& fn) {
  std::vector<int> pool = universe.to_vector();
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(pool[i]);
    if (!fn(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Every subset of `universe` with at most k elements, by size then lexicographically.
template <typename Fn>
bool for_each_subset_up_to_size(VertexSet universe, int k, Fn&& fn) {
  for (int size = 0; size <= k && size <= universe.size(); ++size) {
    if (!for_each_subset_of_size(universe, size, fn)) return false;
  }
  return true;
}

}  // namespace shallow
