#pragma once

#include <map>
#include <vector>

#include "majority/coloring.hpp"
#include "majority/graph.hpp"

namespace majority {

struct SplitMap {
  /// Edge of G -> edge of G*. Split graphs reuse the edge ids of G, so this
  /// is the identity on ids; it is kept explicit for the transfer step.
  std::map<EdgeId, EdgeId> edge_to_split;
  std::map<EdgeId, EdgeId> edge_from_split;
  /// Vertex of G -> its copies in G*, in part order.
  std::map<VertexId, std::vector<VertexId>> copies;
  /// Copy in G* -> original vertex of G.
  std::map<VertexId, VertexId> original;
};

struct SplitGraph {
  Multigraph graph;
  SplitMap map;
};

/// Sizes of the parts a vertex of degree `d` is split into: parts of three,
/// then one part of two when d ≡ 2 (mod 3) or two parts of two when
/// d ≡ 1 (mod 3). Degrees up to 3 stay whole.
std::vector<std::size_t> split_parts(std::size_t d);

/// Splits every vertex of degree > 3 into copies of degree 2 or 3, handing
/// out incident edges to the parts in ascending id order. Copies are
/// numbered consecutively, vertices of G in ascending order. Isolated
/// vertices keep a single isolated copy.
SplitGraph split_graph(const Multigraph& g);

/// Proper edge coloring from lists of size >= 4 of a graph with maximum
/// degree <= 3. Edges are eliminated from the line graph by fewest remaining
/// neighbors and colored in reverse elimination order with backtracking.
EdgeColoring proper_list_edge_color_subcubic(const Multigraph& g, const ListAssignment& lists);

/// Majority edge-coloring of a graph without pendant edges from lists of
/// size >= 4, through split_graph and a proper coloring of the split graph.
EdgeColoring majority_4list(const Multigraph& g, const ListAssignment& lists);

/// Whether adjacent edges always get different colors.
bool is_proper(const Multigraph& g, const EdgeColoring& c);

}  // namespace majority
