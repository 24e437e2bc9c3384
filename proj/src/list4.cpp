#include "majority/list4.hpp"

#include <algorithm>
#include <string>

#include "majority/error.hpp"

namespace majority {

namespace {

void require_no_pendant(const Multigraph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 1) {
      fail(ErrorCode::kPrecondition, "pendant edge at vertex " + std::to_string(v.value));
    }
  }
}

constexpr std::uint64_t kBacktrackCap = 100'000'000;

class ProperListColorer {
 public:
  ProperListColorer(const Multigraph& g, const ListAssignment& lists)
      : m_(g.edge_count()), adjacent_(m_), color_(m_, kNone) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      auto inc = g.incident_at(v);
      for (std::size_t a = 0; a < inc.size(); ++a) {
        for (std::size_t b = a + 1; b < inc.size(); ++b) {
          const std::size_t ea = g.edge_index(inc[a]);
          const std::size_t eb = g.edge_index(inc[b]);
          adjacent_[ea].push_back(eb);
          adjacent_[eb].push_back(ea);
        }
      }
    }
    lists_.reserve(m_);
    for (const Edge& e : g.edges()) lists_.push_back(&lists.at(e.id));
  }

  // Elimination order by fewest remaining line-graph neighbors; returns the
  // reversed order, which is the coloring order.
  std::vector<std::size_t> coloring_order() const {
    std::vector<std::size_t> remaining_degree(m_);
    std::vector<bool> removed(m_, false);
    for (std::size_t e = 0; e < m_; ++e) remaining_degree[e] = adjacent_[e].size();
    std::vector<std::size_t> order;
    order.reserve(m_);
    for (std::size_t step = 0; step < m_; ++step) {
      std::size_t best = m_;
      for (std::size_t e = 0; e < m_; ++e) {
        if (!removed[e] && (best == m_ || remaining_degree[e] < remaining_degree[best])) best = e;
      }
      if (remaining_degree[best] > 4) {
        fail(ErrorCode::kInternal, "line graph of a subcubic graph is not 4-degenerate");
      }
      removed[best] = true;
      order.push_back(best);
      for (std::size_t nb : adjacent_[best]) --remaining_degree[nb];
    }
    std::reverse(order.begin(), order.end());
    return order;
  }

  bool free_for(std::size_t e, Color c) const {
    return std::none_of(adjacent_[e].begin(), adjacent_[e].end(),
                        [&](std::size_t nb) { return color_[nb] == c; });
  }

  bool has_option(std::size_t e) const {
    return std::any_of(lists_[e]->begin(), lists_[e]->end(), [&](Color c) { return free_for(e, c); });
  }

  bool solve(const std::vector<std::size_t>& order, std::size_t k) {
    if (k == order.size()) return true;
    const std::size_t e = order[k];
    for (Color c : *lists_[e]) {
      if (!free_for(e, c)) continue;
      if (++nodes_ > kBacktrackCap) {
        fail(ErrorCode::kInternal, "proper list coloring search did not terminate in time");
      }
      color_[e] = c;
      const bool viable = std::all_of(adjacent_[e].begin(), adjacent_[e].end(), [&](std::size_t nb) {
        return color_[nb] != kNone || has_option(nb);
      });
      if (viable && solve(order, k + 1)) return true;
      color_[e] = kNone;
    }
    return false;
  }

  Color color(std::size_t e) const { return color_[e]; }

 private:
  static constexpr Color kNone = ~Color{0};

  std::size_t m_;
  std::vector<std::vector<std::size_t>> adjacent_;
  std::vector<const ColorList*> lists_;
  std::vector<Color> color_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<std::size_t> split_parts(std::size_t d) {
  if (d <= 3) return {d};
  std::vector<std::size_t> parts;
  const std::size_t twos = d % 3 == 0 ? 0 : (d % 3 == 1 ? 2 : 1);
  parts.assign((d - 2 * twos) / 3, 3);
  parts.insert(parts.end(), twos, 2);
  return parts;
}

SplitGraph split_graph(const Multigraph& g) {
  require_no_pendant(g);
  SplitGraph out;
  std::map<std::pair<VertexId, EdgeId>, VertexId> copy_at;
  std::vector<VertexId> vertices;
  std::uint32_t next = 0;
  for (VertexId v : g.vertices()) {
    auto inc = g.incident(v);
    std::size_t cursor = 0;
    for (std::size_t part : split_parts(inc.size())) {
      const VertexId copy{next++};
      vertices.push_back(copy);
      out.map.copies[v].push_back(copy);
      out.map.original[copy] = v;
      for (std::size_t k = 0; k < part; ++k) copy_at[{v, inc[cursor++]}] = copy;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back(Edge{e.id, copy_at.at({e.u, e.id}), copy_at.at({e.v, e.id})});
    out.map.edge_to_split[e.id] = e.id;
    out.map.edge_from_split[e.id] = e.id;
  }
  out.graph = Multigraph::build(std::move(vertices), std::move(edges));
  return out;
}

EdgeColoring proper_list_edge_color_subcubic(const Multigraph& g, const ListAssignment& lists) {
  if (g.max_degree() > 3) {
    fail(ErrorCode::kPrecondition,
         "maximum degree is " + std::to_string(g.max_degree()) + ", at most 3 allowed");
  }
  check_lists(g, lists, 4, false);
  ProperListColorer colorer(g, lists);
  const auto order = colorer.coloring_order();
  if (!colorer.solve(order, 0)) {
    fail(ErrorCode::kInternal, "no proper list edge coloring found for a subcubic graph");
  }
  EdgeColoring out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) out[g.edges()[i].id] = colorer.color(i);
  return out;
}

EdgeColoring majority_4list(const Multigraph& g, const ListAssignment& lists) {
  require_no_pendant(g);
  check_lists(g, lists, 4, false);
  const SplitGraph split = split_graph(g);
  ListAssignment split_lists;
  for (const auto& [e, list] : lists) split_lists[split.map.edge_to_split.at(e)] = list;
  const EdgeColoring star = proper_list_edge_color_subcubic(split.graph, split_lists);
  EdgeColoring out;
  for (const auto& [e, c] : star) out[split.map.edge_from_split.at(e)] = c;
  return out;
}

bool is_proper(const Multigraph& g, const EdgeColoring& c) {
  check_total(g, c);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<Color> seen;
    for (EdgeId e : g.incident_at(v)) seen.push_back(c.at(e));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

}  // namespace majority
