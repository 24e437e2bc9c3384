#pragma once

#include <optional>
#include <vector>

#include "majority/graph.hpp"

namespace majority {

/// Walk given by its edges and the vertices between them:
/// vertices[i] --edges[i]--> vertices[i+1]. A closed trail ends where it
/// starts.
struct Trail {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  bool closed = false;

  std::size_t size() const { return edges.size(); }
  VertexId base() const { return vertices.front(); }
};

/// Where an Euler tour begins. With an edge, the tour's first edge is that
/// edge, traversed away from `from` (default: its `u` endpoint).
struct TourStart {
  std::optional<EdgeId> edge;
  std::optional<VertexId> from;
};

/// Closed Euler tour of the unique non-trivial component of `g`
/// (Hierholzer; the lowest unused edge id is always taken first).
///
/// Requires every degree to be even and all edges to lie in one component.
/// Without a start edge the tour leaves `from`, or the lowest non-isolated
/// vertex, through its lowest edge.
Trail euler_tour(const Multigraph& g, TourStart start = {});

/// Edge following `e` in the trail; cyclic for closed trails.
EdgeId successor(const Trail& t, EdgeId e);
EdgeId predecessor(const Trail& t, EdgeId e);

/// Checks the walk property, edge uniqueness and closure.
bool is_valid_trail(const Multigraph& g, const Trail& t);

}  // namespace majority
