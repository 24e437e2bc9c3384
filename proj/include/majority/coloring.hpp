#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "majority/graph.hpp"

namespace majority {

using Color = std::uint32_t;

/// Sorted, duplicate-free set of admissible colors for one edge (or vertex).
using ColorList = std::vector<Color>;

using ListAssignment = std::map<EdgeId, ColorList>;
using EdgeColoring = std::map<EdgeId, Color>;
using VertexColoring = std::map<VertexId, Color>;

/// Sorts and deduplicates a list in place.
ColorList normalized(ColorList list);

/// Same list on every edge of `g`.
ListAssignment uniform_lists(const Multigraph& g, const ColorList& list);

/// Throws kInvalidArgument unless `lists` is defined exactly on E(g), every
/// list is duplicate-free and has at least `min_size` (and, if `exact` is
/// set, exactly `min_size`) colors.
void check_lists(const Multigraph& g, const ListAssignment& lists, std::size_t min_size,
                 bool exact);

/// Throws kInvalidArgument unless `c` is defined exactly on E(g).
void check_total(const Multigraph& g, const EdgeColoring& c);

/// Throws kInvalidArgument unless c(e) ∈ L(e) for every edge.
void check_from_lists(const EdgeColoring& c, const ListAssignment& lists);

/// Restriction of `c` to the edges of `g`.
EdgeColoring restrict_to(const EdgeColoring& c, const Multigraph& g);

}  // namespace majority
