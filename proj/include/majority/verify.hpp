#pragma once

#include <map>
#include <string_view>

#include "majority/coloring.hpp"
#include "majority/graph.hpp"

namespace majority {

enum class StatusKind { kMajority, kAlmostMajority, kViolating };

/// Classification of one vertex under a coloring.
///
/// For an edge coloring, `excess` is count(color) - (degree - count(color))
/// for the most frequent color at the vertex (ties go to the smaller color).
/// AlmostMajority means 1 <= excess <= 2, with `color` the overwhelming
/// color; Violating means excess >= 3. For a vertex coloring, `excess` is
/// same-colored minus differently-colored neighbors.
struct VertexStatus {
  StatusKind kind = StatusKind::kMajority;
  Color color = 0;
  int excess = 0;

  friend bool operator==(const VertexStatus&, const VertexStatus&) = default;
};

enum class Verdict { kAllMajority, kAlmostOnly, kViolations };

struct VerificationReport {
  std::map<VertexId, VertexStatus> vertices;
  Verdict verdict = Verdict::kAllMajority;

  std::size_t count(StatusKind kind) const;
};

std::string_view to_string(StatusKind kind);
std::string_view to_string(Verdict verdict);

/// Majority / almost-majority classification of every vertex.
VerificationReport verify_edge_majority(const Multigraph& g, const EdgeColoring& c);

/// Status of a single vertex from its color counts.
VertexStatus classify_counts(const std::map<Color, int>& counts, int degree);

Verdict verdict_of(const std::map<VertexId, VertexStatus>& vertices);

}  // namespace majority
