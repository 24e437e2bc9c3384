#include <doctest.h>

#include <set>

#include "majority/compactness.hpp"
#include "majority/error.hpp"
#include "support.hpp"

using namespace majority;

namespace {

// Vertices whose whole lazy neighborhood is inside the ball.
std::vector<VertexId> full_vertices(const Ball& b) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < b.lazy.size(); ++i) {
    if (b.graph.incident_at(i).size() == b.full_degree[i]) out.push_back(b.graph.vertices()[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("ball sizes") {
  const auto grid = grid_graph();
  const auto b1 = extract_ball(grid, 1);
  CHECK(b1.interior_count() == 5);
  CHECK(b1.lazy.size() == 13);

  const auto b0 = extract_ball(grid, 0);
  CHECK(b0.interior_count() == 1);
  CHECK(b0.lazy.size() == 5);
  CHECK(b0.lazy[0] == grid.root);

  const auto tree = tree4_graph();
  const auto t2 = extract_ball(tree, 2);
  CHECK(t2.interior_count() == 17);
  CHECK(t2.lazy.size() == 17 + 36);
  CHECK(extract_ball(tree, 0).lazy.size() == 5);

  // ℓ¹ ball of radius r has 2r²+2r+1 points.
  for (std::size_t r = 0; r <= 4; ++r) {
    CHECK(extract_ball(grid, r).interior_count() == 2 * r * r + 2 * r + 1);
    CHECK(extract_ball(grid, r).lazy.size() == 2 * (r + 1) * (r + 1) + 2 * (r + 1) + 1);
  }
}

TEST_CASE("ball graphs are induced on B'_n") {
  const auto grid = grid_graph();
  const auto b = extract_ball(grid, 2);
  // Grid edges join lattice points at distance one; count those pairs directly.
  std::set<LazyVertex> in(b.lazy.begin(), b.lazy.end());
  std::size_t pairs = 0;
  for (std::int64_t x = -4; x <= 4; ++x) {
    for (std::int64_t y = -4; y <= 4; ++y) {
      const LazyVertex p = grid_vertex(x, y);
      if (!in.contains(p)) continue;
      pairs += in.contains(grid_vertex(x + 1, y));
      pairs += in.contains(grid_vertex(x, y + 1));
    }
  }
  CHECK(b.graph.edge_count() == pairs);
  for (std::size_t i = 0; i < b.lazy.size(); ++i) CHECK(b.full_degree[i] == 4);
}

TEST_CASE("nesting: smaller balls are prefixes") {
  for (const auto& lazy : {grid_graph(), tree4_graph()}) {
    const auto big = extract_ball(lazy, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      const auto small = extract_ball(lazy, r);
      REQUIRE(small.lazy.size() <= big.lazy.size());
      for (std::size_t i = 0; i < small.lazy.size(); ++i) CHECK(small.lazy[i] == big.lazy[i]);
      for (std::size_t i = 0; i < small.interior.size(); ++i) {
        if (small.interior[i]) CHECK(big.interior[i]);
      }
    }
  }
}

TEST_CASE("tower examples") {
  const auto grid = grid_graph();
  const auto t = color_ball_tower(grid, 2, 1);
  for (VertexId v : full_vertices(t.ball)) {
    CHECK(testing::excess(t.ball.graph, t.coloring).at(v) <= 0);
  }
  for (std::size_t i = 0; i < t.ball.lazy.size(); ++i) {
    if (t.ball.interior[i]) {
      CHECK(testing::excess(t.ball.graph, t.coloring).at(t.ball.graph.vertices()[i]) <= 0);
    }
  }
  for (const auto& [e, c] : t.coloring) CHECK(c < 3);

  const auto t0 = color_ball_tower(grid, 0, 0);
  CHECK(t0.ball.graph.edge_count() == 4);
  CHECK(testing::excess(t0.ball.graph, t0.coloring).at(VertexId{0}) <= 0);

  const auto tree = tree4_graph();
  const auto tt = color_ball_tower(tree, 2, 0);
  CHECK(check_membership(tt.ball, tt.coloring).ok);
  for (std::size_t i = 0; i < tt.ball.lazy.size(); ++i) {
    if (tt.ball.interior[i]) {
      CHECK(testing::excess(tt.ball.graph, tt.coloring).at(tt.ball.graph.vertices()[i]) <= 0);
    }
  }
}

TEST_CASE("tower is deterministic") {
  const auto a = color_ball_tower(grid_graph(), 2, 1);
  const auto b = color_ball_tower(grid_graph(), 2, 1);
  CHECK(a.coloring == b.coloring);
  CHECK(a.ball.lazy == b.ball.lazy);
}

TEST_CASE("restriction consistency") {
  CHECK(restriction_consistency(grid_graph(), 3, 1).ok);
  CHECK(restriction_consistency(tree4_graph(), 2, 1).ok);
  CHECK_THROWS_AS(restriction_consistency(grid_graph(), 0, 1), Error);
}

TEST_CASE("restriction consistency catches a perturbed coloring") {
  const auto lazy = grid_graph();
  const auto t = color_ball_tower(lazy, 2, 1);
  const auto inner = extract_ball(lazy, 1);
  std::size_t caught = 0, tried = 0;
  for (const Edge& e : t.ball.graph.edges()) {
    // Only edges that survive the restriction can matter.
    const auto u = inner.find(t.ball.lazy[e.u.value]);
    const auto v = inner.find(t.ball.lazy[e.v.value]);
    if (!u || !v) continue;
    for (Color shift : {1u, 2u}) {
      auto bad = t.coloring;
      bad[e.id] = (bad[e.id] + shift) % 3;
      ++tried;
      const auto r = restriction_consistency(lazy, t.ball, bad);
      if (!r.ok) {
        ++caught;
        REQUIRE(r.violated.has_value());
        REQUIRE(r.violated_lazy.has_value());
        const auto restricted = restrict_to_ball(t.ball, bad, inner);
        CHECK(testing::excess(inner.graph, restricted).at(*r.violated) > 0);
      }
    }
  }
  CHECK(tried > 0);
  CHECK(caught > 0);
}

TEST_CASE("low degree lazy graphs are rejected") {
  LazyGraph line;
  line.root = 0;
  line.neighbors = [](LazyVertex v) {
    return std::vector<LazyVertex>{v + 1, v == 0 ? 1000000 : v - 1};
  };
  CHECK_THROWS_AS(color_ball_tower(line, 1, 1), Error);

  LazyGraph broken;
  broken.root = 0;
  broken.neighbors = [](LazyVertex v) {
    return v == 0 ? std::vector<LazyVertex>{1} : std::vector<LazyVertex>{};
  };
  CHECK_THROWS_AS(extract_ball(broken, 1), Error);
}
