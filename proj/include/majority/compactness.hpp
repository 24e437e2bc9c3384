#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "majority/coloring.hpp"
#include "majority/graph.hpp"
#include "majority/majority3.hpp"

namespace majority {

/// Vertex of a lazily generated graph.
using LazyVertex = std::uint64_t;

/// Locally finite graph given by a root and a neighbor oracle. The oracle
/// must be deterministic and symmetric, and safe to call concurrently.
struct LazyGraph {
  LazyVertex root = 0;
  std::function<std::vector<LazyVertex>(LazyVertex)> neighbors;
  /// Vertices of the dominating subgraph F; balls grow only through F.
  /// Empty means F is the whole graph.
  std::function<bool(LazyVertex)> in_core;
  std::string name;
};

/// ℤ² with root (0,0); coordinates are packed into one id.
LazyGraph grid_graph();
/// Infinite 4-regular tree, vertices in level order (root 0).
LazyGraph tree4_graph();

LazyVertex grid_vertex(std::int64_t x, std::int64_t y);

/// Finite piece of a lazy graph: vertices within distance `radius` of the
/// root (through the core) form B_n, and their neighbors are added to form
/// B'_n. Graph vertices are numbered 0.. in BFS discovery order, so the
/// numbering of a smaller ball is a prefix of a larger one.
struct Ball {
  std::size_t radius = 0;
  Multigraph graph;
  /// lazy[i] is the lazy vertex behind graph vertex i.
  std::vector<LazyVertex> lazy;
  /// interior[i]: vertex i lies in B_n; otherwise it is in B'_n \ B_n.
  std::vector<bool> interior;
  /// Number of neighbors in the lazy graph.
  std::vector<std::size_t> full_degree;

  std::size_t interior_count() const;
  std::optional<VertexId> find(LazyVertex v) const;
};

Ball extract_ball(const LazyGraph& lazy, std::size_t radius);

/// Vertices of `ball` that must be majority colored in a member of V_n:
/// every vertex of degree >= 4 in B'_n.
std::vector<bool> majority_required(const Ball& ball);

/// Restriction of a coloring of `big` to the edges of `small`, matching
/// edges through their lazy endpoints. `small` must be a ball of the same
/// lazy graph with a smaller or equal radius.
EdgeColoring restrict_to_ball(const Ball& big, const EdgeColoring& coloring, const Ball& small);

struct Tower {
  Ball ball;            ///< B'_n
  Ball horizon;         ///< B'_{n+k}
  EdgeColoring coloring;  ///< coloring of B'_n
  EdgeColoring horizon_coloring;
  SearchStats stats;
};

/// 3-edge-coloring of B'_n in which every vertex of degree >= 4 is
/// majority colored, obtained by restricting such a coloring of
/// B'_{n+lookahead}. Every explored vertex must have degree >= 4.
Tower color_ball_tower(const LazyGraph& lazy, std::size_t depth, std::size_t lookahead,
                       const SearchBudget& budget = {});

struct MembershipCheck {
  bool ok = true;
  std::optional<VertexId> violated;
  std::optional<LazyVertex> violated_lazy;
};

/// Whether `coloring` of `ball` belongs to V_n.
MembershipCheck check_membership(const Ball& ball, const EdgeColoring& coloring);

/// Restricts the level-`depth` tower coloring to B'_{depth-1} and checks
/// membership in V_{depth-1}.
MembershipCheck restriction_consistency(const LazyGraph& lazy, std::size_t depth,
                                        std::size_t lookahead = 1,
                                        const SearchBudget& budget = {});

/// Same check for an explicit coloring of the level-`depth` ball.
MembershipCheck restriction_consistency(const LazyGraph& lazy, const Ball& ball,
                                        const EdgeColoring& coloring);

}  // namespace majority
