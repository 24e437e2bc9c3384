#include "majority/compactness.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "majority/error.hpp"
#include "majority/verify.hpp"

namespace majority {

namespace {

std::uint32_t zigzag(std::int64_t x) {
  return static_cast<std::uint32_t>(x >= 0 ? 2 * x : -2 * x - 1);
}

std::int64_t unzigzag(std::uint32_t z) {
  return (z & 1U) ? -static_cast<std::int64_t>((z + 1) / 2) : static_cast<std::int64_t>(z / 2);
}

using EndpointKey = std::pair<LazyVertex, LazyVertex>;

EndpointKey key_of(LazyVertex a, LazyVertex b) { return a < b ? EndpointKey{a, b} : EndpointKey{b, a}; }

bool in_core(const LazyGraph& lazy, LazyVertex v) { return !lazy.in_core || lazy.in_core(v); }

}  // namespace

LazyVertex grid_vertex(std::int64_t x, std::int64_t y) {
  return (static_cast<LazyVertex>(zigzag(x)) << 32) | zigzag(y);
}

LazyGraph grid_graph() {
  LazyGraph g;
  g.name = "grid";
  g.root = grid_vertex(0, 0);
  g.neighbors = [](LazyVertex v) {
    const std::int64_t x = unzigzag(static_cast<std::uint32_t>(v >> 32));
    const std::int64_t y = unzigzag(static_cast<std::uint32_t>(v & 0xffffffffULL));
    return std::vector<LazyVertex>{grid_vertex(x + 1, y), grid_vertex(x - 1, y),
                                   grid_vertex(x, y + 1), grid_vertex(x, y - 1)};
  };
  return g;
}

LazyGraph tree4_graph() {
  LazyGraph g;
  g.name = "tree4";
  g.root = 0;
  // Root children 1..4; vertex i >= 1 has children 3i+2, 3i+3, 3i+4.
  g.neighbors = [](LazyVertex v) {
    if (v == 0) return std::vector<LazyVertex>{1, 2, 3, 4};
    const LazyVertex parent = v <= 4 ? 0 : (v - 2) / 3;
    return std::vector<LazyVertex>{parent, 3 * v + 2, 3 * v + 3, 3 * v + 4};
  };
  return g;
}

std::size_t Ball::interior_count() const {
  return static_cast<std::size_t>(std::count(interior.begin(), interior.end(), true));
}

std::optional<VertexId> Ball::find(LazyVertex v) const {
  auto it = std::find(lazy.begin(), lazy.end(), v);
  if (it == lazy.end()) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - lazy.begin())};
}

Ball extract_ball(const LazyGraph& lazy, std::size_t radius) {
  if (!in_core(lazy, lazy.root)) fail(ErrorCode::kInvalidArgument, "root is outside the core");
  Ball ball;
  ball.radius = radius;
  std::unordered_map<LazyVertex, std::size_t> index;
  std::vector<std::size_t> dist;
  std::vector<std::vector<LazyVertex>> adjacency;

  auto discover = [&](LazyVertex v, std::size_t d, bool inside) {
    index.emplace(v, ball.lazy.size());
    ball.lazy.push_back(v);
    ball.interior.push_back(inside);
    dist.push_back(d);
  };
  discover(lazy.root, 0, true);
  for (std::size_t i = 0; i < ball.lazy.size(); ++i) {
    if (!ball.interior[i]) continue;
    adjacency.resize(ball.lazy.size());
    adjacency[i] = lazy.neighbors(ball.lazy[i]);
    for (LazyVertex w : adjacency[i]) {
      if (index.contains(w)) continue;
      const bool inside = dist[i] + 1 <= radius && in_core(lazy, w);
      discover(w, dist[i] + 1, inside);
    }
  }
  adjacency.resize(ball.lazy.size());
  for (std::size_t i = 0; i < ball.lazy.size(); ++i) {
    if (!ball.interior[i]) adjacency[i] = lazy.neighbors(ball.lazy[i]);
    ball.full_degree.push_back(adjacency[i].size());
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t i = 0; i < ball.lazy.size(); ++i) {
    std::map<std::size_t, int> multiplicity;
    for (LazyVertex w : adjacency[i]) {
      if (w == ball.lazy[i]) fail(ErrorCode::kInvalidArgument, "neighbor oracle reports a loop");
      auto it = index.find(w);
      if (it != index.end()) ++multiplicity[it->second];
    }
    for (const auto& [j, k] : multiplicity) {
      const auto back = std::count(adjacency[j].begin(), adjacency[j].end(), ball.lazy[i]);
      if (back != k) {
        fail(ErrorCode::kInvalidArgument, "neighbor oracle is not symmetric at lazy vertex " +
                                              std::to_string(ball.lazy[i]));
      }
      if (j <= i) continue;
      for (int c = 0; c < k; ++c) {
        edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  }
  ball.graph = Multigraph::build(ball.lazy.size(), edges);
  return ball;
}

std::vector<bool> majority_required(const Ball& ball) {
  std::vector<bool> out(ball.graph.vertex_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ball.graph.incident_at(i).size() >= 4;
  return out;
}

EdgeColoring restrict_to_ball(const Ball& big, const EdgeColoring& coloring, const Ball& small) {
  std::map<EndpointKey, std::vector<EdgeId>> by_endpoints;
  for (const Edge& e : big.graph.edges()) {
    by_endpoints[key_of(big.lazy[e.u.value], big.lazy[e.v.value])].push_back(e.id);
  }
  std::map<EndpointKey, std::size_t> used;
  EdgeColoring out;
  for (const Edge& e : small.graph.edges()) {
    const EndpointKey key = key_of(small.lazy[e.u.value], small.lazy[e.v.value]);
    auto it = by_endpoints.find(key);
    std::size_t& k = used[key];
    if (it == by_endpoints.end() || k >= it->second.size()) {
      fail(ErrorCode::kInvalidArgument, "ball edge " + std::to_string(e.id.value) +
                                            " has no counterpart in the larger ball");
    }
    out[e.id] = coloring.at(it->second[k++]);
  }
  return out;
}

MembershipCheck check_membership(const Ball& ball, const EdgeColoring& coloring) {
  const VerificationReport report = verify_edge_majority(ball.graph, coloring);
  const auto required = majority_required(ball);
  MembershipCheck out;
  for (std::size_t i = 0; i < required.size(); ++i) {
    const VertexId v = ball.graph.vertices()[i];
    if (required[i] && report.vertices.at(v).kind != StatusKind::kMajority) {
      out.ok = false;
      out.violated = v;
      out.violated_lazy = ball.lazy[i];
      break;
    }
  }
  return out;
}

Tower color_ball_tower(const LazyGraph& lazy, std::size_t depth, std::size_t lookahead,
                       const SearchBudget& budget) {
  Tower tower;
  tower.horizon = extract_ball(lazy, depth + lookahead);
  for (std::size_t i = 0; i < tower.horizon.lazy.size(); ++i) {
    if (in_core(lazy, tower.horizon.lazy[i]) && tower.horizon.full_degree[i] < 4) {
      fail(ErrorCode::kPrecondition, "lazy vertex " + std::to_string(tower.horizon.lazy[i]) +
                                         " has degree " +
                                         std::to_string(tower.horizon.full_degree[i]) +
                                         ", at least 4 required");
    }
  }
  auto found = search_majority3(tower.horizon.graph, majority_required(tower.horizon), budget,
                                &tower.stats);
  if (!found) fail(ErrorCode::kInternal, "no coloring of the horizon ball exists");
  tower.horizon_coloring = std::move(*found);
  tower.ball = extract_ball(lazy, depth);
  tower.coloring = restrict_to_ball(tower.horizon, tower.horizon_coloring, tower.ball);
  const MembershipCheck member = check_membership(tower.ball, tower.coloring);
  if (!member.ok) {
    fail(ErrorCode::kPrecondition,
         "restriction to B'_" + std::to_string(depth) + " leaves lazy vertex " +
             std::to_string(*member.violated_lazy) + " non-majority");
  }
  return tower;
}

MembershipCheck restriction_consistency(const LazyGraph& lazy, std::size_t depth,
                                        std::size_t lookahead, const SearchBudget& budget) {
  if (depth < 1) fail(ErrorCode::kInvalidArgument, "restriction needs depth >= 1");
  const Tower tower = color_ball_tower(lazy, depth, lookahead, budget);
  return restriction_consistency(lazy, tower.ball, tower.coloring);
}

MembershipCheck restriction_consistency(const LazyGraph& lazy, const Ball& ball,
                                        const EdgeColoring& coloring) {
  if (ball.radius < 1) fail(ErrorCode::kInvalidArgument, "restriction needs depth >= 1");
  const Ball smaller = extract_ball(lazy, ball.radius - 1);
  return check_membership(smaller, restrict_to_ball(ball, coloring, smaller));
}

}  // namespace majority
