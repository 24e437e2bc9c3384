#include <doctest.h>

#include <algorithm>
#include <set>

#include "majority/error.hpp"
#include "majority/generators.hpp"
#include "majority/list4.hpp"
#include "majority/majority3.hpp"
#include "support.hpp"

using namespace majority;

namespace {

// Adjacent edges differ, recounted from the edge list.
bool proper(const Multigraph& g, const EdgeColoring& c) {
  for (const auto& [v, counts] : testing::tally(g, c)) {
    for (const auto& [col, n] : counts) {
      if (n > 1) return false;
    }
  }
  return true;
}

void check_split(const Multigraph& g, const SplitGraph& s) {
  CHECK(s.graph.edge_count() == g.edge_count());
  for (const Edge& e : g.edges()) {
    CHECK(s.map.edge_to_split.at(e.id) == e.id);
    CHECK(s.map.edge_from_split.at(e.id) == e.id);
  }
  for (VertexId v : g.vertices()) {
    const auto& copies = s.map.copies.at(v);
    const auto parts = split_parts(g.degree(v));
    if (g.degree(v) == 0) {
      CHECK(copies.size() == 1);
      continue;
    }
    REQUIRE(copies.size() == parts.size());
    std::multiset<EdgeId> pooled;
    for (std::size_t i = 0; i < copies.size(); ++i) {
      CHECK(s.map.original.at(copies[i]) == v);
      CHECK(s.graph.degree(copies[i]) == parts[i]);
      if (g.degree(v) > 3) CHECK((parts[i] == 2 || parts[i] == 3));
      for (EdgeId e : s.graph.incident(copies[i])) pooled.insert(e);
    }
    const auto inc = g.incident(v);
    CHECK(pooled == std::multiset<EdgeId>(inc.begin(), inc.end()));
  }
  CHECK(s.graph.max_degree() <= 3);
}

bool has_pendant(const Multigraph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 1) return true;
  }
  return false;
}

// Random simple graph with every degree at most 3.
Multigraph random_subcubic(std::size_t n, Rng& rng) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<int> deg(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (deg[i] < 3 && deg[j] < 3 && rng.below(3) == 0) {
        edges.emplace_back(i, j);
        ++deg[i];
        ++deg[j];
      }
    }
  }
  return Multigraph::build(n, edges);
}

}  // namespace

TEST_CASE("split parts") {
  CHECK(split_parts(4) == std::vector<std::size_t>{2, 2});
  CHECK(split_parts(5) == std::vector<std::size_t>{3, 2});
  CHECK(split_parts(6) == std::vector<std::size_t>{3, 3});
  CHECK(split_parts(7) == std::vector<std::size_t>{3, 2, 2});
  CHECK(split_parts(3) == std::vector<std::size_t>{3});
  CHECK(split_parts(2) == std::vector<std::size_t>{2});
  for (std::size_t d = 4; d < 40; ++d) {
    const auto p = split_parts(d);
    std::size_t sum = 0;
    for (std::size_t x : p) sum += x;
    CHECK(sum == d);
    CHECK(p.size() <= d / 2);
  }
}

TEST_CASE("split graph examples") {
  const auto k5 = gen::complete(5);
  const auto s = split_graph(k5);
  CHECK(s.graph.vertex_count() == 10);
  CHECK(s.graph.edge_count() == 10);
  for (VertexId v : s.graph.vertices()) CHECK(s.graph.degree(v) == 2);
  check_split(k5, s);

  const auto c4 = gen::cycle(4);
  CHECK(split_graph(c4).graph == c4);

  // Degree-7 hub whose seven neighbors form a cycle.
  MultigraphBuilder b(gen::star(7));
  for (std::uint32_t i = 1; i <= 7; ++i) b.add_edge(VertexId{i}, VertexId{i % 7 + 1});
  const auto wheel = std::move(b).build();
  const auto t = split_graph(wheel);
  REQUIRE(t.map.copies.at(VertexId{0}).size() == 3);
  std::vector<std::size_t> hub;
  for (VertexId c : t.map.copies.at(VertexId{0})) hub.push_back(t.graph.degree(c));
  CHECK(hub == std::vector<std::size_t>{3, 2, 2});
  check_split(wheel, t);

  CHECK_THROWS_AS(split_graph(gen::star(7)), Error);
}

TEST_CASE("split graph on random multigraphs") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = testing::random_simple(2 + rng.below(9), 200 + rng.below(800), rng);
    MultigraphBuilder b(base);
    for (int k = 0; k < 3 && base.edge_count() > 0; ++k) {
      const Edge& e = base.edges()[rng.below(base.edge_count())];
      b.add_edge(e.u, e.v);
    }
    const auto g = std::move(b).build();
    if (has_pendant(g)) {
      CHECK_THROWS_AS(split_graph(g), Error);
    } else {
      check_split(g, split_graph(g));
    }
  }
}

TEST_CASE("proper list coloring of subcubic graphs") {
  const auto c4 = gen::cycle(4);
  const auto c = proper_list_edge_color_subcubic(c4, uniform_lists(c4, {1, 2, 3, 4}));
  CHECK(proper(c4, c));
  CHECK(is_proper(c4, c));

  const auto k4 = gen::complete(4);
  CHECK(testing::brute_proper(k4, 3));
  const auto d = proper_list_edge_color_subcubic(k4, uniform_lists(k4, {1, 2, 3, 4}));
  CHECK(proper(k4, d));

  const auto p = gen::petersen();
  const auto e = proper_list_edge_color_subcubic(p, uniform_lists(p, {1, 2, 3, 4}));
  CHECK(proper(p, e));
  for (const auto& [id, col] : e) CHECK((col >= 1 && col <= 4));

  CHECK_THROWS_AS(proper_list_edge_color_subcubic(gen::complete(5), uniform_lists(gen::complete(5), {0, 1, 2, 3})), Error);
}

TEST_CASE("proper list coloring from random 4-lists") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_subcubic(3 + rng.below(12), rng);
    const auto lists = testing::random_lists(g, 4, 4 + rng.below(6), rng);
    const auto c = proper_list_edge_color_subcubic(g, lists);
    CHECK(proper(g, c));
    CHECK(testing::colors_from_lists(g, c, lists));
  }
}

TEST_CASE("majority from 4-lists: examples") {
  const auto k5 = gen::complete(5);
  const auto c = majority_4list(k5, uniform_lists(k5, {1, 2, 3, 4}));
  for (const auto& [v, counts] : testing::tally(k5, c)) {
    for (const auto& [col, n] : counts) CHECK(n <= 2);
  }

  const auto c4 = gen::cycle(4);
  Rng rng(3);
  const auto l4 = testing::random_lists(c4, 4, 7, rng);
  const auto d = majority_4list(c4, l4);
  CHECK(proper(c4, d));
  CHECK(testing::colors_from_lists(c4, d, l4));

  const auto gadget = gen::class2_gadget(gen::cycle(3), VertexId{0});
  const auto e = majority_4list(gadget, uniform_lists(gadget, {1, 2, 3, 4}));
  CHECK(testing::all_majority(gadget, e));
  CHECK_FALSE(exists_majority3(gadget, {}).exists());

  CHECK_THROWS_AS(majority_4list(gen::path(2), uniform_lists(gen::path(2), {0, 1, 2, 3})), Error);
  CHECK_THROWS_AS(majority_4list(c4, uniform_lists(c4, {0, 1, 2})), Error);
}

TEST_CASE("majority from 4-lists: split soundness on random graphs") {
  for (gen::Seed s = 0; s < 60; ++s) {
    const std::size_t n = 4 + s % 9;
    const std::size_t m = std::min(n * (n - 1) / 2, n + s % (2 * n));
    const auto g = gen::random_graph_min_degree(n, m, 2, s);
    Rng rng(s * 7 + 1);
    const auto lists = testing::random_lists(g, 4 + s % 2, 6, rng);
    const auto c = majority_4list(g, lists);
    CHECK(testing::colors_from_lists(g, c, lists));
    CHECK(testing::all_majority(g, c));
    for (const auto& [v, counts] : testing::tally(g, c)) {
      const std::size_t bound = split_parts(g.degree(v)).size();
      for (const auto& [col, k] : counts) CHECK(static_cast<std::size_t>(k) <= bound);
    }
  }
}
