#include "majority/linegraph.hpp"

#include <string>

#include "majority/error.hpp"

namespace majority {

VerificationReport verify_vertex_majority(const Multigraph& g, const VertexColoring& c) {
  for (VertexId v : g.vertices()) {
    if (!c.contains(v)) {
      fail(ErrorCode::kInvalidArgument, "coloring misses vertex " + std::to_string(v.value));
    }
  }
  if (c.size() != g.vertex_count()) {
    fail(ErrorCode::kInvalidArgument, "coloring names vertices outside the graph");
  }
  VerificationReport report;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const VertexId v = g.vertices()[i];
    const Color own = c.at(v);
    int same = 0;
    int different = 0;
    for (EdgeId e : g.incident_at(i)) {
      (c.at(g.edge(e).other(v)) == own ? same : different) += 1;
    }
    VertexStatus s;
    if (same > different) {
      s.kind = StatusKind::kViolating;
      s.color = own;
      s.excess = same - different;
    }
    report.vertices.emplace_hint(report.vertices.end(), v, s);
  }
  report.verdict = verdict_of(report.vertices);
  return report;
}

LineGraphColoring majority_vertex_color_linegraph(const Multigraph& h, const ListAssignment& lists,
                                                  const ColorList& universe) {
  LineGraphColoring out;
  out.edge_coloring = color_finite(h, lists, universe);
  out.line = line_graph(h);
  for (const auto& [edge, vertex] : out.line.map.pairs) {
    out.coloring[vertex] = out.edge_coloring.coloring.at(edge);
  }
  out.report = verify_vertex_majority(out.line.graph, out.coloring);
  return out;
}

}  // namespace majority
