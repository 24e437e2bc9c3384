#include "majority/majority2.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "majority/error.hpp"
#include "majority/euler.hpp"

namespace majority {

namespace {

void require_even_degrees(const Multigraph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) % 2 != 0) {
      fail(ErrorCode::kPrecondition, "odd-degree vertex " + std::to_string(v.value));
    }
  }
}

Color first_other_than(const ColorList& list, Color avoid) {
  for (Color c : list) {
    if (c != avoid) return c;
  }
  fail(ErrorCode::kInternal, "2-list without an alternative color");
}

std::size_t component_size(const Multigraph& g, const std::vector<VertexId>& comp) {
  std::size_t twice = 0;
  for (VertexId v : comp) twice += g.degree(v);
  return twice / 2;
}

}  // namespace

EdgeColoring color_even_size(const Multigraph& g, const ListAssignment& lists) {
  if (g.edge_count() == 0) fail(ErrorCode::kPrecondition, "graph has no edges");
  if (g.edge_count() % 2 != 0) {
    fail(ErrorCode::kPrecondition, "size " + std::to_string(g.edge_count()) + " is odd");
  }
  require_even_degrees(g);
  check_lists(g, lists, 2, true);

  const Trail tour = euler_tour(g);
  const std::size_t m = tour.size();
  std::vector<const ColorList*> list(m);
  for (std::size_t i = 0; i < m; ++i) list[i] = &lists.at(tour.edges[i]);

  std::vector<Color> color(m);
  std::size_t seam = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (*list[i] != *list[(i + 1) % m]) {
      seam = i;
      break;
    }
  }
  if (seam == m) {
    for (std::size_t i = 0; i < m; ++i) color[i] = (*list[i])[i % 2];
  } else {
    const std::size_t first = (seam + 1) % m;
    const ColorList& before = *list[seam];
    color[first] = list[first]->front();
    for (Color c : *list[first]) {
      if (std::find(before.begin(), before.end(), c) == before.end()) {
        color[first] = c;
        break;
      }
    }
    for (std::size_t k = 1; k < m; ++k) {
      const std::size_t j = (first + k) % m;
      color[j] = first_other_than(*list[j], color[(j + m - 1) % m]);
    }
  }

  EdgeColoring out;
  for (std::size_t i = 0; i < m; ++i) out[tour.edges[i]] = color[i];
  return out;
}

EdgeColoring color_odd_size_with_pivot(const Multigraph& g, const ListAssignment& lists,
                                       VertexId pivot) {
  if (g.edge_count() % 2 == 0) {
    fail(ErrorCode::kPrecondition, "size " + std::to_string(g.edge_count()) +
                                       " is even, use color_even_size");
  }
  require_even_degrees(g);
  check_lists(g, lists, 2, true);
  if (g.degree(pivot) == 0) {
    fail(ErrorCode::kPrecondition, "pivot " + std::to_string(pivot.value) + " is isolated");
  }

  const Trail tour = euler_tour(g, TourStart{g.incident(pivot).front(), pivot});
  EdgeColoring out;
  Color prev = lists.at(tour.edges.front()).front();
  out[tour.edges.front()] = prev;
  for (std::size_t i = 1; i < tour.size(); ++i) {
    prev = first_other_than(lists.at(tour.edges[i]), prev);
    out[tour.edges[i]] = prev;
  }
  return out;
}

std::vector<EdgeId> AugmentationRecord::added_edges() const {
  std::vector<EdgeId> out;
  for (const auto& p : pairs) out.insert(out.end(), p.path.begin(), p.path.end());
  return out;
}

std::vector<VertexId> AugmentationRecord::added_vertices() const {
  std::vector<VertexId> out;
  for (const auto& p : pairs) out.insert(out.end(), p.internal.begin(), p.internal.end());
  return out;
}

Augmented augment_odd_pairs(const Multigraph& g) {
  std::vector<VertexId> odd;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) % 2 != 0) odd.push_back(v);
  }
  if (odd.empty()) fail(ErrorCode::kPrecondition, "no odd-degree vertices to pair");

  const bool lengthen_first = g.edge_count() % 2 != 0;
  Augmented out;
  MultigraphBuilder b(g);
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
    AugmentedPair pair{odd[i], odd[i + 1], {}, {}};
    const std::size_t inner = (i == 0 && lengthen_first) ? 2 : 1;
    VertexId prev = pair.x;
    for (std::size_t k = 0; k < inner; ++k) {
      VertexId w = b.add_vertex();
      pair.internal.push_back(w);
      pair.path.push_back(b.add_edge(prev, w));
      prev = w;
    }
    pair.path.push_back(b.add_edge(prev, pair.y));
    out.record.pairs.push_back(std::move(pair));
  }
  out.graph = std::move(b).build();
  return out;
}

Multigraph remove_augmentation(const Multigraph& augmented, const AugmentationRecord& record) {
  return augmented.without_edges(record.added_edges()).without_vertices(record.added_vertices());
}

ColorList universe_of(const ListAssignment& lists) {
  std::set<Color> all;
  for (const auto& [e, l] : lists) all.insert(l.begin(), l.end());
  return ColorList(all.begin(), all.end());
}

FiniteColoring color_finite(const Multigraph& g, const ListAssignment& lists,
                            const ColorList& universe) {
  check_lists(g, lists, 2, true);
  const ColorList palette = normalized(universe);
  for (const auto& [e, l] : lists) {
    for (Color c : l) {
      if (!std::binary_search(palette.begin(), palette.end(), c)) {
        fail(ErrorCode::kInvalidArgument, "list color " + std::to_string(c) +
                                              " of edge " + std::to_string(e.value) +
                                              " is outside the universe");
      }
    }
  }
  if (g.edge_count() > 0 && palette.size() < 2) {
    fail(ErrorCode::kInvalidArgument, "universe needs at least two colors");
  }

  FiniteColoring out;
  for (const auto& comp : components(g)) {
    const Multigraph sub = g.induced(comp);
    if (sub.edge_count() == 0) continue;
    ListAssignment sub_lists;
    for (const Edge& e : sub.edges()) sub_lists[e.id] = lists.at(e.id);

    const bool all_even = std::all_of(comp.begin(), comp.end(),
                                      [&](VertexId v) { return sub.degree(v) % 2 == 0; });
    EdgeColoring part;
    if (all_even && sub.edge_count() % 2 == 0) {
      part = color_even_size(sub, sub_lists);
    } else if (all_even) {
      part = color_odd_size_with_pivot(sub, sub_lists, comp.front());
      out.pivots.push_back(PivotNote{comp, comp.front()});
    } else {
      Augmented aug = augment_odd_pairs(sub);
      const ColorList reserve{palette[0], palette[1]};
      for (EdgeId e : aug.record.added_edges()) sub_lists[e] = reserve;
      part = restrict_to(color_even_size(aug.graph, sub_lists), sub);
    }
    out.coloring.insert(part.begin(), part.end());
  }
  out.report = verify_edge_majority(g, out.coloring);
  return out;
}

Decision2 decide_majority2(const Multigraph& g) {
  Decision2 d;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) % 2 != 0) {
      d.admits = false;
      d.odd_vertex = v;
      return d;
    }
  }
  for (const auto& comp : components(g)) {
    const std::size_t size = component_size(g, comp);
    if (size % 2 != 0) {
      d.admits = false;
      d.odd_component = comp;
      d.odd_component_size = size;
      return d;
    }
  }
  return d;
}

}  // namespace majority
