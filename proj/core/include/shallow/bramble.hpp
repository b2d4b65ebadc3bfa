#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shallow/depth.hpp"
#include "shallow/graph.hpp"
#include "shallow/limits.hpp"

namespace shallow {

/// A family of vertex sets, stored sorted in canonical order without duplicates.
struct Bramble {
  std::vector<VertexSet> elements;
  Depth depth;

  /// Sorts and deduplicates `elements`.
  static Bramble from_elements(std::vector<VertexSet> elements, Depth depth);
  VertexSet support() const;
};

/// Minimum hitting set of a bramble, with a proof that nothing smaller works.
struct OrderCertificate {
  int order = 0;
  VertexSet hitting_set;
  /// For every X with |X| = order - 1 (canonical order), the index of an
  /// element disjoint from X. Omitted when there are too many such X.
  std::optional<std::vector<std::pair<VertexSet, int>>> misses;
};

/// Number of (order - 1)-subsets above which certificates omit `misses`.
inline constexpr long long kCertificateMissLimit = 50000;

/// Minimum-size hitting set by branch and bound (deterministic).
VertexSet minimum_hitting_set(std::span<const VertexSet> family);

/// Every element connected with radius <= r, and every pair touching.
/// Throws InvalidArgument on an empty element.
bool validate_bramble(const Graph& g, const Bramble& bramble, Depth r);

/// Valid depth-r bramble in which any t elements (repetition allowed) share a vertex.
bool is_t_bramble(const Graph& g, const Bramble& bramble, Depth r, int t);

/// Valid depth-r bramble in which every three elements share a vertex or
/// each contain an endpoint of one common edge. Throws InvalidArgument if the
/// family is not a valid depth-r bramble.
bool is_tangle(const Graph& g, const Bramble& bramble, Depth r);

/// Exact order with certificate. Throws InvalidArgument for an invalid bramble.
OrderCertificate bramble_order(const Graph& g, const Bramble& bramble);

/// Re-checks a certificate against the bramble it claims to describe.
bool verify_order_certificate(const Graph& g, const Bramble& bramble, const OrderCertificate& certificate);

/// Extra conditions on the families searched for.
struct BrambleConstraints {
  /// Every `intersecting` elements (with repetition) share a vertex; 1 = none.
  int intersecting = 1;
  bool tangle = false;
};

struct BrambleNumber {
  int value = 0;
  Bramble witness;
  OrderCertificate certificate;
};

/// Maximum order of a depth-r bramble meeting `constraints`, with a witness
/// in which every element is needed by the certificate.
BrambleNumber max_bramble_order(const Graph& g, Depth r, BrambleConstraints constraints,
                                const SearchLimits& limits = SearchLimits::from_environment());

inline BrambleNumber bramble_number(const Graph& g, Depth r,
                                    const SearchLimits& limits = SearchLimits::from_environment()) {
  return max_bramble_order(g, r, {}, limits);
}
inline BrambleNumber t_bramble_number(const Graph& g, Depth r, int t,
                                      const SearchLimits& limits = SearchLimits::from_environment()) {
  return max_bramble_order(g, r, {t, false}, limits);
}
inline BrambleNumber tangle_number(const Graph& g, Depth r,
                                   const SearchLimits& limits = SearchLimits::from_environment()) {
  return max_bramble_order(g, r, {1, true}, limits);
}

/// Does some depth-r family meeting `constraints` have order at least k?
/// Returns the family (unpruned) when it does.
std::optional<std::vector<VertexSet>> find_bramble_of_order(const Graph& g, Depth r, int k,
                                                            BrambleConstraints constraints,
                                                            const SearchLimits& limits = SearchLimits::from_environment());

}  // namespace shallow
