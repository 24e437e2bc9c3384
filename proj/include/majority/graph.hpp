#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace majority {

struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  bool incident_to(VertexId w) const { return u == w || v == w; }
  /// Endpoint opposite to `w`; `w` must be an endpoint.
  VertexId other(VertexId w) const { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite loopless multigraph with stable identifiers.
///
/// Vertices are kept sorted by id and edges sorted by id. Identifiers are
/// never reused within one graph lineage: surgery keeps the id counters of
/// the source graph, so fresh ids handed out later never collide with ids
/// that were deleted.
///
/// Values are immutable once built; every surgery operation returns a new
/// graph.
class Multigraph {
 public:
  Multigraph() = default;

  /// Vertices 0..vertex_count-1, edge ids assigned in input order.
  static Multigraph build(std::size_t vertex_count,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);
  static Multigraph build(std::size_t vertex_count,
                          std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges);

  /// Explicit identifiers. Ids must be unique; order of the input does not
  /// matter.
  static Multigraph build(std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;

  /// Dense position of a vertex (0..vertex_count-1). Throws kNotFound.
  std::size_t vertex_index(VertexId v) const;
  /// Dense position of an edge (0..edge_count-1). Throws kNotFound.
  std::size_t edge_index(EdgeId e) const;

  const Edge& edge(EdgeId e) const { return edges_[edge_index(e)]; }

  /// Incident edges in ascending id order.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[vertex_index(v)]; }
  std::span<const EdgeId> incident_at(std::size_t vertex_index) const {
    return incidence_[vertex_index];
  }

  std::size_t degree(VertexId v) const { return incident(v).size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  Multigraph without_edges(std::span<const EdgeId> removed) const;
  /// Drops the given vertices together with every incident edge.
  Multigraph without_vertices(std::span<const VertexId> removed) const;
  /// Subgraph induced by `keep`; ids are preserved.
  Multigraph induced(std::span<const VertexId> keep) const;

  /// Next fresh ids of this lineage.
  VertexId next_vertex_id() const { return VertexId{next_vertex_}; }
  EdgeId next_edge_id() const { return EdgeId{next_edge_}; }

  /// Same vertex ids and same (id, endpoints) edges; id counters are ignored.
  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend class MultigraphBuilder;

  void index();

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::uint32_t next_vertex_ = 0;
  std::uint32_t next_edge_ = 0;
};

/// Accumulates vertices and edges, optionally on top of an existing graph
/// whose ids and counters are preserved.
class MultigraphBuilder {
 public:
  MultigraphBuilder() = default;
  explicit MultigraphBuilder(const Multigraph& base);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);

  Multigraph build() &&;

 private:
  Multigraph graph_;
};

struct LineGraphMap {
  /// pairs[i] holds the i-th edge of H (by position) and its line-graph vertex.
  std::vector<std::pair<EdgeId, VertexId>> pairs;

  VertexId vertex_of(EdgeId e) const;
  EdgeId edge_of(VertexId v) const;
};

struct LineGraph {
  Multigraph graph;
  LineGraphMap map;
};

/// One vertex per edge of `h`; one line-graph edge per shared endpoint, so
/// parallel edges of `h` become doubly adjacent.
LineGraph line_graph(const Multigraph& h);

/// Vertex classes of connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<VertexId>> components(const Multigraph& g);

/// Disjoint union; vertices and edges of `b` are shifted past the id
/// counters of `a`. Returns the union and the vertex offset applied to `b`.
std::pair<Multigraph, std::uint32_t> disjoint_union(const Multigraph& a, const Multigraph& b);

}  // namespace majority

template <>
struct std::hash<majority::VertexId> {
  std::size_t operator()(majority::VertexId v) const noexcept { return v.value; }
};
template <>
struct std::hash<majority::EdgeId> {
  std::size_t operator()(majority::EdgeId e) const noexcept { return e.value; }
};
