#include "majority/euler.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "majority/error.hpp"

namespace majority {

Trail euler_tour(const Multigraph& g, TourStart start) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) % 2 != 0) {
      fail(ErrorCode::kPrecondition, "odd-degree vertex " + std::to_string(v.value));
    }
  }
  Trail tour;
  tour.closed = true;
  if (g.edge_count() == 0) {
    if (start.edge) fail(ErrorCode::kNotFound, "unknown edge " + std::to_string(start.edge->value));
    return tour;
  }

  VertexId origin;
  if (start.edge) {
    const Edge& e = g.edge(*start.edge);
    if (start.from && !e.incident_to(*start.from)) {
      fail(ErrorCode::kInvalidArgument, "start vertex is not an endpoint of the start edge");
    }
    origin = start.from.value_or(e.u);
  } else if (start.from) {
    if (g.degree(*start.from) == 0) {
      fail(ErrorCode::kPrecondition, "start vertex " + std::to_string(start.from->value) +
                                         " is isolated");
    }
    origin = *start.from;
  } else {
    auto it = std::find_if(g.vertices().begin(), g.vertices().end(),
                           [&](VertexId v) { return g.degree(v) > 0; });
    origin = *it;
  }

  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  // Stack of (vertex, edge used to arrive there).
  struct Step {
    VertexId vertex;
    std::optional<EdgeId> via;
  };
  std::vector<Step> stack{{origin, std::nullopt}};
  if (start.edge) {
    used[g.edge_index(*start.edge)] = true;
    stack.push_back({g.edge(*start.edge).other(origin), *start.edge});
  }

  std::vector<Step> circuit;
  while (!stack.empty()) {
    const VertexId v = stack.back().vertex;
    const std::size_t vi = g.vertex_index(v);
    auto inc = g.incident_at(vi);
    std::size_t& c = cursor[vi];
    while (c < inc.size() && used[g.edge_index(inc[c])]) ++c;
    if (c < inc.size()) {
      const EdgeId e = inc[c];
      used[g.edge_index(e)] = true;
      stack.push_back({g.edge(e).other(v), e});
    } else {
      circuit.push_back(stack.back());
      stack.pop_back();
    }
  }

  if (circuit.size() != g.edge_count() + 1) {
    fail(ErrorCode::kPrecondition, "edge set is disconnected");
  }
  std::reverse(circuit.begin(), circuit.end());
  tour.vertices.reserve(circuit.size());
  tour.edges.reserve(g.edge_count());
  for (const Step& s : circuit) {
    tour.vertices.push_back(s.vertex);
    if (s.via) tour.edges.push_back(*s.via);
  }
  return tour;
}

namespace {

std::size_t position(const Trail& t, EdgeId e) {
  auto it = std::find(t.edges.begin(), t.edges.end(), e);
  if (it == t.edges.end()) {
    fail(ErrorCode::kNotFound, "edge " + std::to_string(e.value) + " is not in the trail");
  }
  return static_cast<std::size_t>(it - t.edges.begin());
}

}  // namespace

EdgeId successor(const Trail& t, EdgeId e) {
  const std::size_t i = position(t, e);
  if (i + 1 < t.edges.size()) return t.edges[i + 1];
  if (!t.closed) fail(ErrorCode::kInvalidArgument, "last edge of an open trail has no successor");
  return t.edges.front();
}

EdgeId predecessor(const Trail& t, EdgeId e) {
  const std::size_t i = position(t, e);
  if (i > 0) return t.edges[i - 1];
  if (!t.closed) fail(ErrorCode::kInvalidArgument, "first edge of an open trail has no predecessor");
  return t.edges.back();
}

bool is_valid_trail(const Multigraph& g, const Trail& t) {
  if (t.vertices.size() != t.edges.size() + 1) return false;
  std::set<EdgeId> seen;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (!g.has_edge(t.edges[i]) || !seen.insert(t.edges[i]).second) return false;
    const Edge& e = g.edge(t.edges[i]);
    if (!(e.incident_to(t.vertices[i]) && e.other(t.vertices[i]) == t.vertices[i + 1])) return false;
  }
  if (t.closed && t.vertices.front() != t.vertices.back()) return false;
  return true;
}

}  // namespace majority
