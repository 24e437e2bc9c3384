#pragma once
// Test-side helpers. The checkers here recount everything from the edge list
// and share no code with the library's verifier or oracle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "majority/coloring.hpp"
#include "majority/graph.hpp"
#include "majority/random.hpp"

namespace testing {

using namespace majority;

// Color counts at every vertex, rebuilt from the edge list.
inline std::map<VertexId, std::map<Color, int>> tally(const Multigraph& g, const EdgeColoring& c) {
  std::map<VertexId, std::map<Color, int>> out;
  for (VertexId v : g.vertices()) out[v];
  for (const Edge& e : g.edges()) {
    const Color col = c.at(e.id);
    ++out[e.u][col];
    ++out[e.v][col];
  }
  return out;
}

inline int degree_of(const Multigraph& g, VertexId v) {
  int d = 0;
  for (const Edge& e : g.edges()) d += (e.u == v) + (e.v == v);
  return d;
}

// Largest single-color count minus the rest, per vertex (<= 0 means majority).
inline std::map<VertexId, int> excess(const Multigraph& g, const EdgeColoring& c) {
  std::map<VertexId, int> out;
  for (const auto& [v, counts] : tally(g, c)) {
    int top = 0, total = 0;
    for (const auto& [col, k] : counts) {
      top = std::max(top, k);
      total += k;
    }
    out[v] = 2 * top - total;
  }
  return out;
}

inline bool all_majority(const Multigraph& g, const EdgeColoring& c) {
  for (const auto& [v, x] : excess(g, c)) {
    if (x > 0) return false;
  }
  return true;
}

inline bool colors_from_lists(const Multigraph& g, const EdgeColoring& c, const ListAssignment& l) {
  if (c.size() != g.edge_count()) return false;
  for (const Edge& e : g.edges()) {
    auto it = c.find(e.id);
    if (it == c.end()) return false;
    const auto& list = l.at(e.id);
    if (std::find(list.begin(), list.end(), it->second) == list.end()) return false;
  }
  return true;
}

// Odometer over all colorings from the lists; calls `accept` on each full
// coloring until it returns true. No pruning at all, so only for tiny graphs.
inline bool any_coloring(const Multigraph& g, const ListAssignment& lists,
                         const std::function<bool(const EdgeColoring&)>& accept) {
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> digit(m, 0);
  EdgeColoring c;
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) {
      const EdgeId id = g.edges()[i].id;
      c[id] = lists.at(id)[digit[i]];
    }
    if (accept(c)) return true;
    std::size_t i = 0;
    while (i < m) {
      const EdgeId id = g.edges()[i].id;
      if (++digit[i] < lists.at(id).size()) break;
      digit[i] = 0;
      ++i;
    }
    if (i == m) return false;
  }
}

inline ListAssignment palette_lists(const Multigraph& g, std::size_t k) {
  ListAssignment out;
  ColorList l;
  for (std::size_t c = 0; c < k; ++c) l.push_back(static_cast<Color>(c));
  for (const Edge& e : g.edges()) out[e.id] = l;
  return out;
}

inline bool brute_majority(const Multigraph& g, const ListAssignment& lists) {
  return any_coloring(g, lists, [&](const EdgeColoring& c) { return all_majority(g, c); });
}

// Proper k-edge-colorability: plain backtracking that rejects a color as soon
// as an earlier edge sharing an endpoint already has it.
inline bool brute_proper(const Multigraph& g, std::size_t k) {
  const auto edges = g.edges();
  std::vector<std::size_t> col(edges.size());
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == edges.size()) return true;
    for (std::size_t c = 0; c < k; ++c) {
      bool clash = false;
      for (std::size_t j = 0; j < i && !clash; ++j) {
        const bool touch = edges[j].incident_to(edges[i].u) || edges[j].incident_to(edges[i].v);
        clash = touch && col[j] == c;
      }
      if (clash) continue;
      col[i] = c;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

// Random lists of `size` distinct colors out of 0..universe-1.
inline ListAssignment random_lists(const Multigraph& g, std::size_t size, std::size_t universe,
                                   Rng& rng) {
  ListAssignment out;
  for (const Edge& e : g.edges()) {
    ColorList all;
    for (std::size_t c = 0; c < universe; ++c) all.push_back(static_cast<Color>(c));
    rng.shuffle(all);
    all.resize(size);
    std::sort(all.begin(), all.end());
    out[e.id] = all;
  }
  return out;
}

inline bool connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return true;
  std::set<VertexId> seen{g.vertices()[0]};
  std::vector<VertexId> stack{g.vertices()[0]};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges()) {
      if (!e.incident_to(v)) continue;
      const VertexId w = e.other(v);
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == g.vertex_count();
}

// Simple random graph on n vertices, each pair present with probability p/1000.
inline Multigraph random_simple(std::size_t n, std::uint64_t per_mille, Rng& rng) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (rng.below(1000) < per_mille) edges.emplace_back(i, j);
    }
  }
  return Multigraph::build(n, edges);
}

}  // namespace testing
