#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shallow/bramble.hpp"
#include "shallow/depth.hpp"
#include "shallow/graph.hpp"
#include "shallow/limits.hpp"

namespace shallow {

/// S is depth-r k-linked: for each X with |X| < k, `balls` holds a connected
/// set of G - X with radius <= r containing more than |S|/2 vertices of S.
/// Vertices of S inside X still count towards |S|.
struct LinkedWitness {
  VertexSet set;
  int k = 0;
  Depth depth;
  /// (X, set) for every X with |X| < k, X in canonical order.
  std::vector<std::pair<VertexSet, VertexSet>> balls;
  /// k = 0 from a set too small for the well-linked-to-linked step.
  bool vacuous = false;
};

/// S is depth-r well-linked; paths for particular (A, B, Y) come from well_linked_path.
struct WellLinkedWitness {
  VertexSet set;
  Depth depth;
  bool disjoint = false;
};

/// Which pairs (A, B) the well-linked condition quantifies over.
enum class PairMode { overlapping, disjoint };

/// Witness iff S is depth-r k-linked. The balls are the (r)-balls in G - X
/// around the least vertex whose ball holds a majority of S.
std::optional<LinkedWitness> is_k_linked(const Graph& g, VertexSet s, int k, Depth r);

/// Largest k for which S is depth-r k-linked (0 if no connected radius-r set
/// holds a majority of S).
int linkedness_of(const Graph& g, VertexSet s, Depth r, const SearchLimits& limits = SearchLimits::from_environment());

struct Linkedness {
  int value = 0;
  LinkedWitness witness;
};

/// max over S of linkedness_of. Exhaustive over S.
Linkedness linkedness(const Graph& g, Depth r, const SearchLimits& limits = SearchLimits::from_environment());

/// For all nonempty A, B of S with |A| = |B| and all Y with |Y| < |A|, G - Y
/// has an A-B path of length <= r (length 0 when A and B share a vertex outside Y).
bool is_well_linked(const Graph& g, VertexSet s, Depth r, PairMode mode = PairMode::overlapping);

/// The same condition checked literally over every (A, B, Y). For small S only.
bool is_well_linked_by_enumeration(const Graph& g, VertexSet s, Depth r, PairMode mode = PairMode::overlapping);

/// A shortest A-B path in G - Y of length <= r, if one exists.
std::optional<std::vector<int>> well_linked_path(const Graph& g, VertexSet a, VertexSet b, VertexSet y, Depth r);

struct WellLinkedness {
  int value = 0;
  WellLinkedWitness witness;
};

/// Size of the largest depth-r well-linked set, searched by decreasing size.
WellLinkedness well_linkedness(const Graph& g, Depth r, PairMode mode = PairMode::overlapping,
                               const SearchLimits& limits = SearchLimits::from_environment());

/// Minimum hitting set S of a depth-r bramble, with the depth-(3r+1) balls
/// showing it is ceil(|S|/2)-linked. Throws ProofViolation if a ball falls short.
LinkedWitness hitting_set_is_linked(const Graph& g, const Bramble& bramble, Depth r);

/// Minimum hitting set of a depth-r bramble, checked depth-(4r+1) well-linked.
WellLinkedWitness hitting_set_is_well_linked(const Graph& g, const Bramble& bramble, Depth r);

/// A depth-r well-linked S is depth-3r k-linked for k = floor(sqrt(|S|)/2).
/// k = 0 yields a vacuous witness. Throws InvalidArgument if S is not well-linked.
LinkedWitness well_linked_is_linked(const Graph& g, VertexSet s, Depth r);

/// The balls of a k-linked witness as a depth-r bramble of order >= k.
Bramble bramble_from_linked_set(const Graph& g, VertexSet s, int k, Depth r);

/// Re-checks every recorded ball and that the X's are exactly all sets below k.
bool verify_linked(const Graph& g, const LinkedWitness& witness);

/// Re-checks well-linkedness, literally when S and G are small.
bool verify_well_linked(const Graph& g, const WellLinkedWitness& witness);

}  // namespace shallow
