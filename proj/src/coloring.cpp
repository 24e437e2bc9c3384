#include "majority/coloring.hpp"

#include <algorithm>
#include <string>

#include "majority/error.hpp"

namespace majority {

ColorList normalized(ColorList list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

ListAssignment uniform_lists(const Multigraph& g, const ColorList& list) {
  ListAssignment out;
  const ColorList norm = normalized(list);
  for (const Edge& e : g.edges()) out.emplace_hint(out.end(), e.id, norm);
  return out;
}

void check_lists(const Multigraph& g, const ListAssignment& lists, std::size_t min_size,
                 bool exact) {
  if (lists.size() != g.edge_count()) {
    fail(ErrorCode::kInvalidArgument, "list assignment covers " + std::to_string(lists.size()) +
                                          " edges, graph has " + std::to_string(g.edge_count()));
  }
  for (const Edge& e : g.edges()) {
    auto it = lists.find(e.id);
    if (it == lists.end()) {
      fail(ErrorCode::kInvalidArgument, "no list for edge " + std::to_string(e.id.value));
    }
    const ColorList& l = it->second;
    if (normalized(l).size() != l.size()) {
      fail(ErrorCode::kInvalidArgument, "list of edge " + std::to_string(e.id.value) +
                                            " repeats a color");
    }
    if (l.size() < min_size || (exact && l.size() != min_size)) {
      fail(ErrorCode::kInvalidArgument, "list of edge " + std::to_string(e.id.value) + " has " +
                                            std::to_string(l.size()) + " colors, expected " +
                                            (exact ? "" : "at least ") + std::to_string(min_size));
    }
  }
}

void check_total(const Multigraph& g, const EdgeColoring& c) {
  for (const Edge& e : g.edges()) {
    if (!c.contains(e.id)) {
      fail(ErrorCode::kInvalidArgument, "coloring misses edge " + std::to_string(e.id.value));
    }
  }
  if (c.size() != g.edge_count()) {
    fail(ErrorCode::kInvalidArgument, "coloring names edges outside the graph");
  }
}

void check_from_lists(const EdgeColoring& c, const ListAssignment& lists) {
  for (const auto& [e, color] : c) {
    auto it = lists.find(e);
    if (it == lists.end() || std::find(it->second.begin(), it->second.end(), color) == it->second.end()) {
      fail(ErrorCode::kInvalidArgument,
           "color of edge " + std::to_string(e.value) + " is not in its list");
    }
  }
}

EdgeColoring restrict_to(const EdgeColoring& c, const Multigraph& g) {
  EdgeColoring out;
  for (const Edge& e : g.edges()) {
    auto it = c.find(e.id);
    if (it == c.end()) {
      fail(ErrorCode::kInvalidArgument, "coloring misses edge " + std::to_string(e.id.value));
    }
    out.emplace_hint(out.end(), e.id, it->second);
  }
  return out;
}

}  // namespace majority
