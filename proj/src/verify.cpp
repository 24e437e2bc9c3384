#include "majority/verify.hpp"

#include "majority/error.hpp"

namespace majority {

std::string_view to_string(StatusKind kind) {
  switch (kind) {
    case StatusKind::kMajority: return "Majority";
    case StatusKind::kAlmostMajority: return "AlmostMajority";
    case StatusKind::kViolating: return "Violating";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAllMajority: return "AllMajority";
    case Verdict::kAlmostOnly: return "AlmostOnly";
    case Verdict::kViolations: return "Violations";
  }
  return "?";
}

std::size_t VerificationReport::count(StatusKind kind) const {
  std::size_t n = 0;
  for (const auto& [v, s] : vertices) n += s.kind == kind ? 1 : 0;
  return n;
}

VertexStatus classify_counts(const std::map<Color, int>& counts, int degree) {
  VertexStatus s;
  int best = -1;
  for (const auto& [color, n] : counts) {
    if (n > best) {
      best = n;
      s.color = color;
    }
  }
  if (best < 0) return s;
  s.excess = 2 * best - degree;
  if (s.excess <= 0) {
    s = VertexStatus{};
  } else if (s.excess <= 2) {
    s.kind = StatusKind::kAlmostMajority;
  } else {
    s.kind = StatusKind::kViolating;
  }
  return s;
}

Verdict verdict_of(const std::map<VertexId, VertexStatus>& vertices) {
  Verdict v = Verdict::kAllMajority;
  for (const auto& [id, s] : vertices) {
    if (s.kind == StatusKind::kViolating) return Verdict::kViolations;
    if (s.kind == StatusKind::kAlmostMajority) v = Verdict::kAlmostOnly;
  }
  return v;
}

VerificationReport verify_edge_majority(const Multigraph& g, const EdgeColoring& c) {
  check_total(g, c);
  VerificationReport report;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::map<Color, int> counts;
    auto inc = g.incident_at(i);
    for (EdgeId e : inc) ++counts[c.at(e)];
    report.vertices.emplace_hint(report.vertices.end(), g.vertices()[i],
                                 classify_counts(counts, static_cast<int>(inc.size())));
  }
  report.verdict = verdict_of(report.vertices);
  return report;
}

}  // namespace majority
