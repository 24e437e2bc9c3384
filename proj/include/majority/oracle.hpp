#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majority/coloring.hpp"
#include "majority/generators.hpp"
#include "majority/graph.hpp"
#include "majority/majority3.hpp"

namespace majority::oracle {

enum class Predicate { kMajority, kProper };

/// Largest edge count the exhaustive oracle accepts, by palette (or maximum
/// list) size.
struct Caps {
  std::size_t two_colors = 20;
  std::size_t three_colors = 16;
  std::size_t more_colors = 16;
  /// Largest vertex count for induced-subgraph enumeration.
  std::size_t subset_vertices = 16;

  std::size_t for_colors(std::size_t k) const {
    return k <= 2 ? two_colors : (k == 3 ? three_colors : more_colors);
  }
};

struct Result {
  bool exists = false;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
};

/// Plain enumeration in edge-id order. A vertex is checked once its last
/// incident edge is assigned, by recounting its colors; nothing else is
/// pruned. The witness is the lexicographically first valid coloring.
Result exists_coloring(const Multigraph& g, const ListAssignment& lists, Predicate predicate,
                       const Caps& caps = {});
Result exists_coloring(const Multigraph& g, const ColorList& palette, Predicate predicate,
                       const Caps& caps = {});

/// Least k with a proper k-edge-coloring, trying k = Δ, Δ+1, ...
std::size_t chromatic_index(const Multigraph& g, const Caps& caps = {});

struct Conjecture1Check {
  bool has_majority3 = false;
  /// Vertex set of an induced subgraph H with Δ(H) = 3, chromatic index 4,
  /// and a vertex whose degree in H equals its degree in G and is at most 3.
  std::optional<std::vector<VertexId>> explanation;

  bool counterexample() const { return !has_majority3 && !explanation; }
};

/// Classifies one graph without pendant edges against the conjectured
/// obstruction. Induced subgraphs are tried by increasing size.
Conjecture1Check check_conjecture1(const Multigraph& g, const SearchBudget& budget,
                                   const Caps& caps = {});

/// Whether `g` has a majority coloring from `lists`.
bool majority_list_colorable(const Multigraph& g, const ListAssignment& lists,
                             const Caps& caps = {});

struct Counterexample {
  Multigraph graph;
  std::optional<ListAssignment> lists;
  std::size_t trial = 0;
  gen::Seed graph_seed = 0;
};

struct HuntReport {
  int conjecture = 0;
  std::size_t trials_run = 0;
  std::size_t instances_checked = 0;
  std::optional<Counterexample> found;
  std::vector<std::string> notes;
};

/// Randomized probing. Conjecture 1: random graphs without pendant edges
/// with no majority 3-edge-coloring and no subcubic Class 2 induced
/// subgraph explaining it. Conjecture 2: random graphs with minimum degree
/// 4 and random 3-lists over five colors with no majority list coloring.
HuntReport search_counterexample(int conjecture, std::size_t n_max, std::size_t trials,
                                 gen::Seed seed, const SearchBudget& budget = {},
                                 const Caps& caps = {});

}  // namespace majority::oracle
