#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "majority/coloring.hpp"
#include "majority/graph.hpp"

namespace majority {

/// Limits for the backtracking searches. Running out of either limit raises
/// Error(kBudgetExhausted); it never turns into a "no" answer.
struct SearchBudget {
  std::uint64_t node_limit = 10'000'000;
  std::optional<std::chrono::duration<double>> time_limit;
  /// With more than one thread, top subtrees are searched concurrently and
  /// the first one in sequential order that succeeds wins, so the coloring
  /// matches the single-threaded one. Node counts do not.
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  /// Every branch was either extended to a solution or refuted.
  bool tree_closed = false;
};

/// Backtracking search for a 3-edge-coloring in which every vertex whose
/// flag is set in `constrained` (indexed by vertex position) is majority
/// colored. A branch is cut only when some constrained vertex already has
/// more than floor(d/2) edges of one color. Components are searched
/// independently. Returns nullopt when no such coloring exists.
std::optional<EdgeColoring> search_majority3(const Multigraph& g,
                                             const std::vector<bool>& constrained,
                                             const SearchBudget& budget,
                                             SearchStats* stats = nullptr);

/// Majority 3-edge-coloring of a graph with minimum degree at least 4.
EdgeColoring color_min_degree4(const Multigraph& g, const SearchBudget& budget,
                               SearchStats* stats = nullptr);

/// 3-edge-coloring in which every vertex of degree >= 4 is majority
/// colored: a K5 is glued onto each vertex of smaller degree, the
/// supergraph is colored by color_min_degree4, and the result is restricted
/// back to `g`.
EdgeColoring color_partial_min4(const Multigraph& g, const SearchBudget& budget,
                                SearchStats* stats = nullptr);

/// The supergraph used by color_partial_min4.
Multigraph attach_k5_to_low_degree(const Multigraph& g);

struct Existence3 {
  std::optional<EdgeColoring> coloring;
  SearchStats stats;

  bool exists() const { return coloring.has_value(); }
};

/// Complete decision: a certificate, or a closed search tree.
Existence3 exists_majority3(const Multigraph& g, const SearchBudget& budget);

}  // namespace majority
