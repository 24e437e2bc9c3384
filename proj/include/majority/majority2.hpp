#pragma once

#include <optional>
#include <vector>

#include "majority/coloring.hpp"
#include "majority/graph.hpp"
#include "majority/verify.hpp"

namespace majority {

/// Majority coloring from 2-lists of a connected graph with all degrees even
/// and even, positive size.
///
/// Walks an Euler tour. If every list is the same the tour is colored
/// alternately. Otherwise the walk starts at the first consecutive pair
/// (e, e+) whose lists differ: e+ gets a color outside L(e), and each later
/// edge gets a color different from its predecessor, which also separates
/// e from e+ when the walk wraps around.
EdgeColoring color_even_size(const Multigraph& g, const ListAssignment& lists);

/// Coloring from 2-lists of a connected graph with all degrees even and odd
/// size: the tour starts at `pivot` and consecutive edges differ, except
/// possibly at the seam, so only `pivot` can end up almost majority colored
/// (excess 2).
EdgeColoring color_odd_size_with_pivot(const Multigraph& g, const ListAssignment& lists,
                                       VertexId pivot);

struct AugmentedPair {
  VertexId x;
  VertexId y;
  std::vector<EdgeId> path;
  std::vector<VertexId> internal;
};

struct AugmentationRecord {
  std::vector<AugmentedPair> pairs;

  std::vector<EdgeId> added_edges() const;
  std::vector<VertexId> added_vertices() const;
};

struct Augmented {
  Multigraph graph;
  AugmentationRecord record;
};

/// Pairs the odd-degree vertices in ascending order and joins every pair by
/// a fresh path of length 2. If the resulting size is odd, the first pair's
/// path is lengthened to 3.
Augmented augment_odd_pairs(const Multigraph& g);

/// Inverse of augment_odd_pairs.
Multigraph remove_augmentation(const Multigraph& augmented, const AugmentationRecord& record);

struct PivotNote {
  std::vector<VertexId> component;
  VertexId pivot;
};

struct FiniteColoring {
  EdgeColoring coloring;
  VerificationReport report;
  /// Components with all degrees even and odd size, with their pivot.
  std::vector<PivotNote> pivots;
};

/// Every even-degree vertex majority colored and every odd-degree vertex
/// majority or almost majority colored, from 2-lists, per component.
/// `universe` must contain every list color; its two smallest colors are
/// used for the auxiliary paths.
FiniteColoring color_finite(const Multigraph& g, const ListAssignment& lists,
                            const ColorList& universe);

/// Union of all list colors.
ColorList universe_of(const ListAssignment& lists);

struct Decision2 {
  bool admits = true;
  std::optional<VertexId> odd_vertex;
  /// Component (vertex class) of odd size, when that is the obstruction.
  std::vector<VertexId> odd_component;
  std::size_t odd_component_size = 0;
};

/// Whether every 2-list assignment (equivalently, the plain 2-color palette)
/// admits a majority coloring: no odd-degree vertex and no component of odd
/// size.
Decision2 decide_majority2(const Multigraph& g);

}  // namespace majority
