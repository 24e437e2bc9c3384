#pragma once

#include "majority/coloring.hpp"
#include "majority/graph.hpp"
#include "majority/majority2.hpp"
#include "majority/verify.hpp"

namespace majority {

/// Vertex is Majority iff its same-colored neighbors (counted with edge
/// multiplicity) do not outnumber the differently-colored ones; otherwise
/// Violating with excess = same - different.
VerificationReport verify_vertex_majority(const Multigraph& g, const VertexColoring& c);

struct LineGraphColoring {
  LineGraph line;
  VertexColoring coloring;
  VerificationReport report;
  /// Edge-level result on h the vertex coloring was transferred from.
  FiniteColoring edge_coloring;
};

/// Majority vertex-coloring of L(h) from 2-lists: color the edges of h with
/// color_finite and give every line-graph vertex the color of its edge.
LineGraphColoring majority_vertex_color_linegraph(const Multigraph& h, const ListAssignment& lists,
                                                  const ColorList& universe);

}  // namespace majority
