#include "majority/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "majority/error.hpp"

namespace majority {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kBudgetExhausted: return "budget_exhausted";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

void check_endpoints(const Edge& e) {
  if (e.u == e.v) {
    fail(ErrorCode::kInvalidArgument, "loop edge " + std::to_string(e.id.value) + " at vertex " +
                                          std::to_string(e.u.value));
  }
}

}  // namespace

Multigraph Multigraph::build(std::size_t vertex_count,
                             std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<VertexId> vertices(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) vertices[i] = VertexId{static_cast<std::uint32_t>(i)};
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    list.push_back(Edge{EdgeId{static_cast<std::uint32_t>(i)}, VertexId{edges[i].first},
                        VertexId{edges[i].second}});
  }
  return build(std::move(vertices), std::move(list));
}

Multigraph Multigraph::build(std::size_t vertex_count,
                             std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
  return build(vertex_count, std::span(edges.begin(), edges.size()));
}

Multigraph Multigraph::build(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  Multigraph g;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    fail(ErrorCode::kInvalidArgument, "duplicate vertex id");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) {
      fail(ErrorCode::kInvalidArgument, "duplicate edge id " + std::to_string(edges[i].id.value));
    }
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  for (const Edge& e : g.edges_) {
    check_endpoints(e);
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v)) {
      fail(ErrorCode::kInvalidArgument,
           "edge " + std::to_string(e.id.value) + " has an endpoint outside the vertex set");
    }
  }
  g.next_vertex_ = g.vertices_.empty() ? 0 : g.vertices_.back().value + 1;
  g.next_edge_ = g.edges_.empty() ? 0 : g.edges_.back().id.value + 1;
  g.index();
  return g;
}

void Multigraph::index() {
  incidence_.assign(vertices_.size(), {});
  for (const Edge& e : edges_) {
    incidence_[vertex_index(e.u)].push_back(e.id);
    incidence_[vertex_index(e.v)].push_back(e.id);
  }
}

bool Multigraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Multigraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  return it != edges_.end() && it->id == e;
}

std::size_t Multigraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    fail(ErrorCode::kNotFound, "unknown vertex " + std::to_string(v.value));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Multigraph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) {
    fail(ErrorCode::kNotFound, "unknown edge " + std::to_string(e.value));
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Multigraph::min_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < incidence_.size(); ++i) {
    if (i == 0 || incidence_[i].size() < best) best = incidence_[i].size();
  }
  return best;
}

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

Multigraph Multigraph::without_edges(std::span<const EdgeId> removed) const {
  std::vector<bool> drop(edges_.size(), false);
  for (EdgeId e : removed) drop[edge_index(e)] = true;
  Multigraph g;
  g.vertices_ = vertices_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) g.edges_.push_back(edges_[i]);
  }
  g.next_vertex_ = next_vertex_;
  g.next_edge_ = next_edge_;
  g.index();
  return g;
}

Multigraph Multigraph::without_vertices(std::span<const VertexId> removed) const {
  std::vector<bool> drop(vertices_.size(), false);
  for (VertexId v : removed) drop[vertex_index(v)] = true;
  Multigraph g;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!drop[i]) g.vertices_.push_back(vertices_[i]);
  }
  for (const Edge& e : edges_) {
    if (!drop[vertex_index(e.u)] && !drop[vertex_index(e.v)]) g.edges_.push_back(e);
  }
  g.next_vertex_ = next_vertex_;
  g.next_edge_ = next_edge_;
  g.index();
  return g;
}

Multigraph Multigraph::induced(std::span<const VertexId> keep) const {
  std::vector<bool> kept(vertices_.size(), false);
  for (VertexId v : keep) kept[vertex_index(v)] = true;
  std::vector<VertexId> removed;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!kept[i]) removed.push_back(vertices_[i]);
  }
  return without_vertices(removed);
}

MultigraphBuilder::MultigraphBuilder(const Multigraph& base) : graph_(base) {}

VertexId MultigraphBuilder::add_vertex() {
  VertexId v{graph_.next_vertex_++};
  graph_.vertices_.push_back(v);
  return v;
}

EdgeId MultigraphBuilder::add_edge(VertexId u, VertexId v) {
  Edge e{EdgeId{graph_.next_edge_}, u, v};
  check_endpoints(e);
  if (!graph_.has_vertex(u) || !graph_.has_vertex(v)) {
    fail(ErrorCode::kInvalidArgument, "edge endpoint outside the vertex set");
  }
  ++graph_.next_edge_;
  graph_.edges_.push_back(e);
  return e.id;
}

Multigraph MultigraphBuilder::build() && {
  graph_.index();
  return std::move(graph_);
}

VertexId LineGraphMap::vertex_of(EdgeId e) const {
  for (const auto& [edge, vertex] : pairs) {
    if (edge == e) return vertex;
  }
  fail(ErrorCode::kNotFound, "edge " + std::to_string(e.value) + " not in line-graph map");
}

EdgeId LineGraphMap::edge_of(VertexId v) const {
  if (v.value < pairs.size() && pairs[v.value].second == v) return pairs[v.value].first;
  fail(ErrorCode::kNotFound, "vertex " + std::to_string(v.value) + " not in line-graph map");
}

LineGraph line_graph(const Multigraph& h) {
  LineGraph out;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacency;
  for (std::size_t vi = 0; vi < h.vertex_count(); ++vi) {
    auto inc = h.incident_at(vi);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        adjacency.emplace_back(static_cast<std::uint32_t>(h.edge_index(inc[a])),
                               static_cast<std::uint32_t>(h.edge_index(inc[b])));
      }
    }
  }
  out.graph = Multigraph::build(h.edge_count(), adjacency);
  out.map.pairs.reserve(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    out.map.pairs.emplace_back(h.edges()[i].id, VertexId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> label(n, n);
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] != n) continue;
    const std::size_t id = out.size();
    out.emplace_back();
    label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      VertexId cv = g.vertices()[cur];
      out[id].push_back(cv);
      for (EdgeId e : g.incident_at(cur)) {
        std::size_t nb = g.vertex_index(g.edge(e).other(cv));
        if (label[nb] == n) {
          label[nb] = id;
          stack.push_back(nb);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::pair<Multigraph, std::uint32_t> disjoint_union(const Multigraph& a, const Multigraph& b) {
  const std::uint32_t voff = a.next_vertex_id().value;
  const std::uint32_t eoff = a.next_edge_id().value;
  std::vector<VertexId> vertices(a.vertices().begin(), a.vertices().end());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (VertexId v : b.vertices()) vertices.push_back(VertexId{v.value + voff});
  for (const Edge& e : b.edges()) {
    edges.push_back(Edge{EdgeId{e.id.value + eoff}, VertexId{e.u.value + voff},
                         VertexId{e.v.value + voff}});
  }
  return {Multigraph::build(std::move(vertices), std::move(edges)), voff};
}

}  // namespace majority
