#include "majority/oracle.hpp"

#include <algorithm>
#include <map>

#include "majority/error.hpp"
#include "majority/random.hpp"

namespace majority::oracle {

namespace {

class Enumerator {
 public:
  Enumerator(const Multigraph& g, const ListAssignment& lists, Predicate predicate)
      : g_(g), predicate_(predicate), m_(g.edge_count()), color_(m_), due_(m_) {
    for (const Edge& e : g.edges()) lists_.push_back(&lists.at(e.id));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      auto inc = g.incident_at(v);
      if (inc.empty()) continue;
      std::size_t last = 0;
      for (EdgeId e : inc) last = std::max(last, g.edge_index(e));
      due_[last].push_back(v);
    }
  }

  bool run(std::size_t i) {
    if (i == m_) return true;
    for (Color c : *lists_[i]) {
      ++nodes_;
      color_[i] = c;
      bool ok = true;
      for (std::size_t v : due_[i]) {
        if (!vertex_ok(v)) {
          ok = false;
          break;
        }
      }
      if (ok && run(i + 1)) return true;
    }
    return false;
  }

  EdgeColoring witness() const {
    EdgeColoring out;
    for (std::size_t i = 0; i < m_; ++i) out[g_.edges()[i].id] = color_[i];
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool vertex_ok(std::size_t v) const {
    std::map<Color, std::size_t> counts;
    auto inc = g_.incident_at(v);
    for (EdgeId e : inc) ++counts[color_[g_.edge_index(e)]];
    for (const auto& [c, n] : counts) {
      if (predicate_ == Predicate::kProper ? n > 1 : 2 * n > inc.size()) return false;
    }
    return true;
  }

  const Multigraph& g_;
  Predicate predicate_;
  std::size_t m_;
  std::vector<const ColorList*> lists_;
  std::vector<Color> color_;
  std::vector<std::vector<std::size_t>> due_;
  std::uint64_t nodes_ = 0;
};

std::vector<VertexId> subset_vertices(const Multigraph& g, std::uint64_t mask) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (mask >> i & 1U) out.push_back(g.vertices()[i]);
  }
  return out;
}

gen::Seed trial_seed(gen::Seed seed, std::size_t trial) {
  return seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
}

}  // namespace

Result exists_coloring(const Multigraph& g, const ListAssignment& lists, Predicate predicate,
                       const Caps& caps) {
  check_lists(g, lists, 1, false);
  std::size_t widest = 0;
  for (const auto& [e, l] : lists) widest = std::max(widest, l.size());
  const std::size_t cap = caps.for_colors(widest);
  if (g.edge_count() > cap) {
    fail(ErrorCode::kCapExceeded, std::to_string(g.edge_count()) + " edges exceed the oracle cap of " +
                                      std::to_string(cap) + " for " + std::to_string(widest) +
                                      " colors");
  }
  Enumerator en(g, lists, predicate);
  Result r;
  r.exists = en.run(0);
  r.nodes = en.nodes();
  if (r.exists) r.witness = en.witness();
  return r;
}

Result exists_coloring(const Multigraph& g, const ColorList& palette, Predicate predicate,
                       const Caps& caps) {
  if (palette.empty() && g.edge_count() > 0) return Result{};
  return exists_coloring(g, uniform_lists(g, palette), predicate, caps);
}

std::size_t chromatic_index(const Multigraph& g, const Caps& caps) {
  if (g.edge_count() == 0) return 0;
  for (std::size_t k = g.max_degree();; ++k) {
    ColorList palette(k);
    for (std::size_t c = 0; c < k; ++c) palette[c] = static_cast<Color>(c);
    if (exists_coloring(g, palette, Predicate::kProper, caps).exists) return k;
  }
}

bool majority_list_colorable(const Multigraph& g, const ListAssignment& lists, const Caps& caps) {
  return exists_coloring(g, lists, Predicate::kMajority, caps).exists;
}

Conjecture1Check check_conjecture1(const Multigraph& g, const SearchBudget& budget,
                                   const Caps& caps) {
  Conjecture1Check out;
  out.has_majority3 = exists_majority3(g, budget).exists();
  if (out.has_majority3) return out;

  const std::size_t n = g.vertex_count();
  if (n > caps.subset_vertices || n >= 64) {
    fail(ErrorCode::kCapExceeded, std::to_string(n) + " vertices exceed the induced-subgraph cap of " +
                                      std::to_string(caps.subset_vertices));
  }
  for (std::size_t size = 4; size <= n; ++size) {
    // Subsets of `size` vertices in increasing mask order (Gosper's hack).
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      const auto keep = subset_vertices(g, mask);
      const Multigraph h = g.induced(keep);
      if (h.max_degree() == 3) {
        const bool anchored = std::any_of(keep.begin(), keep.end(), [&](VertexId w) {
          return h.degree(w) == g.degree(w) && g.degree(w) <= 3;
        });
        if (anchored && chromatic_index(h, caps) == 4) {
          out.explanation = keep;
          return out;
        }
      }
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return out;
}

HuntReport search_counterexample(int conjecture, std::size_t n_max, std::size_t trials,
                                 gen::Seed seed, const SearchBudget& budget, const Caps& caps) {
  HuntReport report;
  report.conjecture = conjecture;
  if (conjecture != 1 && conjecture != 2) {
    fail(ErrorCode::kInvalidArgument, "conjecture must be 1 or 2");
  }
  const std::size_t n_min = conjecture == 2 ? 5 : 4;
  if (n_max < n_min) {
    fail(ErrorCode::kInvalidArgument, "n_max must be at least " + std::to_string(n_min));
  }
  if (conjecture == 1) {
    report.notes.push_back(
        "obstruction tested: induced H with max degree 3, chromatic index 4, and a vertex whose "
        "degree in H equals its degree in G and is at most 3; the degree condition is one "
        "reading of an ambiguous statement");
  } else {
    report.notes.push_back("lists: 3 random colors out of {0,1,2,3,4} per edge");
  }

  for (std::size_t t = 0; t < trials && !report.found; ++t) {
    ++report.trials_run;
    Rng rng(trial_seed(seed, t));
    const std::size_t n = rng.between(n_min, n_max);
    const std::size_t complete_m = n * (n - 1) / 2;
    std::size_t lo, hi;
    if (conjecture == 2) {
      lo = 2 * n;
      hi = std::min(complete_m, caps.three_colors);
    } else {
      lo = n;
      hi = std::min(complete_m, 3 * n / 2 + 2);
    }
    if (lo > hi) continue;
    const std::size_t m = rng.between(lo, hi);
    const gen::Seed graph_seed = rng.next();
    Multigraph g = gen::random_graph_min_degree(n, m, conjecture == 2 ? 4 : 2, graph_seed);
    ++report.instances_checked;

    if (conjecture == 2) {
      ListAssignment lists;
      for (const Edge& e : g.edges()) {
        ColorList all{0, 1, 2, 3, 4};
        rng.shuffle(all);
        lists[e.id] = normalized(ColorList(all.begin(), all.begin() + 3));
      }
      if (!majority_list_colorable(g, lists, caps)) {
        report.found = Counterexample{std::move(g), std::move(lists), t, graph_seed};
      }
    } else if (check_conjecture1(g, budget, caps).counterexample()) {
      report.found = Counterexample{std::move(g), std::nullopt, t, graph_seed};
    }
  }
  return report;
}

}  // namespace majority::oracle
