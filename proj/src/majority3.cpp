#include "majority/majority3.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "majority/error.hpp"

namespace majority {

namespace {

constexpr int kColors = 3;
constexpr int kUnconstrainedSlack = std::numeric_limits<int>::max() / 4;

using Clock = std::chrono::steady_clock;

// Node and time accounting shared by every worker of one search.
class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

  void charge() {
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.node_limit) {
      fail(ErrorCode::kBudgetExhausted,
           "node budget of " + std::to_string(budget_.node_limit) + " exhausted");
    }
    if (budget_.time_limit && (n & 1023) == 0 &&
        Clock::now() - start_ > *budget_.time_limit) {
      fail(ErrorCode::kBudgetExhausted, "time budget exhausted");
    }
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  const SearchBudget& budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
};

// Search state over one connected graph, everything by dense index.
class Search {
 public:
  Search(const Multigraph& g, const std::vector<bool>& constrained)
      : m_(g.edge_count()),
        eu_(m_),
        ev_(m_),
        color_(m_, -1),
        count_(g.vertex_count(), {0, 0, 0}),
        cap_(g.vertex_count()),
        uncolored_(g.vertex_count()),
        constrained_(constrained) {
    for (std::size_t i = 0; i < m_; ++i) {
      eu_[i] = g.vertex_index(g.edges()[i].u);
      ev_[i] = g.vertex_index(g.edges()[i].v);
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const int d = static_cast<int>(g.incident_at(v).size());
      uncolored_[v] = d;
      cap_[v] = constrained_[v] ? d / 2 : d;
    }
  }

  bool admissible(std::size_t e, int c) const {
    return count_[eu_[e]][c] < cap_[eu_[e]] && count_[ev_[e]][c] < cap_[ev_[e]];
  }

  void assign(std::size_t e, int c) {
    color_[e] = c;
    ++count_[eu_[e]][c];
    ++count_[ev_[e]][c];
    --uncolored_[eu_[e]];
    --uncolored_[ev_[e]];
    ++colored_;
  }

  void unassign(std::size_t e) {
    const int c = color_[e];
    color_[e] = -1;
    --count_[eu_[e]][c];
    --count_[ev_[e]][c];
    ++uncolored_[eu_[e]];
    ++uncolored_[ev_[e]];
    --colored_;
  }

  int slack(std::size_t v) const {
    if (!constrained_[v]) return kUnconstrainedSlack;
    int room = 0;
    for (int c = 0; c < kColors; ++c) room += cap_[v] - count_[v][c];
    return room - uncolored_[v];
  }

  // Uncolored edge with fewest admissible colors, then least endpoint slack,
  // then lowest position.
  std::size_t pick() const {
    std::size_t best = m_;
    std::array<int, 2> best_key{};
    for (std::size_t e = 0; e < m_; ++e) {
      if (color_[e] >= 0) continue;
      int avail = 0;
      for (int c = 0; c < kColors; ++c) avail += admissible(e, c) ? 1 : 0;
      const std::array<int, 2> key{avail, std::min(slack(eu_[e]), slack(ev_[e]))};
      if (best == m_ || key < best_key) {
        best = e;
        best_key = key;
        if (avail == 0) break;
      }
    }
    return best;
  }

  int max_used() const {
    int mx = -1;
    for (std::size_t e = 0; e < m_; ++e) mx = std::max(mx, color_[e]);
    return mx;
  }

  // Colors at or below (highest color used so far) + 1 only; colors are
  // interchangeable so this loses no solution up to renaming.
  int color_bound() const { return std::min(kColors - 1, max_used() + 1); }

  // Gives up once an earlier subtree than `index` has succeeded.
  bool solve(BudgetGuard& guard, const std::atomic<std::size_t>* best = nullptr,
             std::size_t index = 0) {
    if (colored_ == m_) return true;
    if (best && best->load(std::memory_order_relaxed) < index) return false;
    const std::size_t e = pick();
    const int bound = color_bound();
    for (int c = 0; c <= bound; ++c) {
      if (!admissible(e, c)) continue;
      guard.charge();
      assign(e, c);
      if (solve(guard, best, index)) return true;
      unassign(e);
    }
    return false;
  }

  // Partial states at the first depth holding at least `want` open nodes.
  std::vector<std::vector<int>> frontier(std::size_t want, BudgetGuard& guard) {
    std::vector<std::vector<int>> layer{color_};
    while (layer.size() < want) {
      std::vector<std::vector<int>> next;
      bool grew = false;
      for (const auto& state : layer) {
        load(state);
        if (colored_ == m_) {
          next.push_back(state);
          continue;
        }
        const std::size_t e = pick();
        const int bound = color_bound();
        for (int c = 0; c <= bound; ++c) {
          if (!admissible(e, c)) continue;
          guard.charge();
          assign(e, c);
          next.push_back(color_);
          unassign(e);
          grew = true;
        }
      }
      layer = std::move(next);
      if (!grew) break;
    }
    return layer;
  }

  void load(const std::vector<int>& state) {
    for (std::size_t e = 0; e < m_; ++e) {
      if (color_[e] >= 0) unassign(e);
    }
    for (std::size_t e = 0; e < m_; ++e) {
      if (state[e] >= 0) assign(e, state[e]);
    }
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  std::size_t m_;
  std::vector<std::size_t> eu_, ev_;
  std::vector<int> color_;
  std::vector<std::array<int, kColors>> count_;
  std::vector<int> cap_;
  std::vector<int> uncolored_;
  std::vector<bool> constrained_;
  std::size_t colored_ = 0;
};

std::optional<std::vector<int>> solve_parallel(Search& root, BudgetGuard& guard,
                                               unsigned threads) {
  const auto work = root.frontier(static_cast<std::size_t>(threads) * 8, guard);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::mutex mu;
  std::vector<std::optional<std::vector<int>>> found(work.size());
  std::size_t error_index = kNone;
  std::exception_ptr error;

  auto worker = [&, local = root]() mutable {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size() || best.load() < i) return;
      try {
        local.load(work[i]);
        if (local.solve(guard, &best, i)) {
          std::lock_guard lock(mu);
          found[i] = local.colors();
          if (i < best.load()) best.store(i);
          return;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        // Later subtrees cannot matter once this one is undecided.
        if (i < best.load()) best.store(i);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (error && i == error_index) std::rethrow_exception(error);
    if (found[i]) return found[i];
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeColoring> search_majority3(const Multigraph& g,
                                             const std::vector<bool>& constrained,
                                             const SearchBudget& budget, SearchStats* stats) {
  if (constrained.size() != g.vertex_count()) {
    fail(ErrorCode::kInvalidArgument, "constraint mask does not match the vertex count");
  }
  BudgetGuard guard(budget);
  EdgeColoring out;
  bool ok = true;
  for (const auto& comp : components(g)) {
    const Multigraph sub = g.induced(comp);
    if (sub.edge_count() == 0) continue;
    std::vector<bool> mask(sub.vertex_count());
    for (std::size_t i = 0; i < sub.vertex_count(); ++i) {
      mask[i] = constrained[g.vertex_index(sub.vertices()[i])];
    }
    Search search(sub, mask);
    std::optional<std::vector<int>> colors;
    if (budget.threads > 1) {
      colors = solve_parallel(search, guard, budget.threads);
    } else if (search.solve(guard)) {
      colors = search.colors();
    }
    if (!colors) {
      ok = false;
      break;
    }
    for (std::size_t i = 0; i < sub.edge_count(); ++i) {
      out[sub.edges()[i].id] = static_cast<Color>((*colors)[i]);
    }
  }
  if (stats) {
    stats->nodes = guard.nodes();
    stats->tree_closed = true;
  }
  if (!ok) return std::nullopt;
  return out;
}

EdgeColoring color_min_degree4(const Multigraph& g, const SearchBudget& budget, SearchStats* stats) {
  if (g.vertex_count() > 0 && g.min_degree() < 4) {
    fail(ErrorCode::kPrecondition,
         "minimum degree is " + std::to_string(g.min_degree()) + ", at least 4 required");
  }
  auto result = search_majority3(g, std::vector<bool>(g.vertex_count(), true), budget, stats);
  if (!result) {
    fail(ErrorCode::kInternal,
         "no majority 3-edge-coloring found for a graph of minimum degree >= 4");
  }
  return *result;
}

Multigraph attach_k5_to_low_degree(const Multigraph& g) {
  MultigraphBuilder b(g);
  for (VertexId u : g.vertices()) {
    if (g.degree(u) >= 4) continue;
    std::array<VertexId, 5> k5{u, b.add_vertex(), b.add_vertex(), b.add_vertex(), b.add_vertex()};
    for (std::size_t i = 0; i < k5.size(); ++i) {
      for (std::size_t j = i + 1; j < k5.size(); ++j) b.add_edge(k5[i], k5[j]);
    }
  }
  return std::move(b).build();
}

EdgeColoring color_partial_min4(const Multigraph& g, const SearchBudget& budget,
                                SearchStats* stats) {
  const Multigraph super = attach_k5_to_low_degree(g);
  return restrict_to(color_min_degree4(super, budget, stats), g);
}

Existence3 exists_majority3(const Multigraph& g, const SearchBudget& budget) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 1) {
      fail(ErrorCode::kPrecondition, "pendant edge at vertex " + std::to_string(v.value));
    }
  }
  Existence3 out;
  out.coloring = search_majority3(g, std::vector<bool>(g.vertex_count(), true), budget, &out.stats);
  return out;
}

}  // namespace majority
