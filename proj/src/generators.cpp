#include "majority/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "majority/error.hpp"
#include "majority/random.hpp"

namespace majority::gen {

namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n) : n_(n), bits_(n * n, false), degree_(n, 0) {}

  bool has(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }
  void add(std::size_t a, std::size_t b) {
    bits_[a * n_ + b] = bits_[b * n_ + a] = true;
    ++degree_[a];
    ++degree_[b];
    edges_.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  std::size_t degree(std::size_t a) const { return degree_[a]; }
  const EdgeList& edges() const { return edges_; }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
  std::vector<std::size_t> degree_;
  EdgeList edges_;
};

// Deterministic per-attempt seeds derived from the user seed.
Seed attempt_seed(Seed seed, std::size_t attempt) {
  return seed ^ (0x9e3779b97f4a7c15ULL * (attempt + 1));
}

std::vector<std::size_t> iota_vector(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

Multigraph cycle(std::size_t n) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % n));
  }
  return Multigraph::build(n, edges);
}

Multigraph path(std::size_t edge_count) {
  EdgeList edges;
  for (std::size_t i = 0; i < edge_count; ++i) {
    edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1));
  }
  return Multigraph::build(edge_count + 1, edges);
}

Multigraph complete(std::size_t n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "complete graph needs at least 1 vertex");
  EdgeList edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Multigraph::build(n, edges);
}

Multigraph star(std::size_t leaves) {
  EdgeList edges;
  for (std::uint32_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Multigraph::build(leaves + 1, edges);
}

Multigraph petersen() {
  EdgeList edges;
  for (std::uint32_t i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (std::uint32_t i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (std::uint32_t i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return Multigraph::build(10, edges);
}

Multigraph class2_gadget(const Multigraph& g_prime, VertexId u) {
  if (!g_prime.has_vertex(u)) {
    fail(ErrorCode::kNotFound, "unknown vertex " + std::to_string(u.value));
  }
  for (VertexId v : g_prime.vertices()) {
    if (g_prime.degree(v) == 1) {
      fail(ErrorCode::kPrecondition,
           "g_prime has a pendant edge at vertex " + std::to_string(v.value));
    }
  }
  auto [joined, offset] = disjoint_union(g_prime, petersen());
  MultigraphBuilder b(joined);
  b.add_edge(u, VertexId{offset + kGadgetAttachment});
  return std::move(b).build();
}

Multigraph random_even_graph(std::size_t n, std::size_t target_m, Seed seed) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "random_even_graph needs n >= 3");
  const std::size_t max_even = n % 2 == 1 ? n * (n - 1) / 2 : n * (n - 1) / 2 - n / 2;
  if (target_m > max_even + n) {
    fail(ErrorCode::kInvalidArgument, "infeasible parameters: no simple even graph on " +
                                          std::to_string(n) + " vertices has about " +
                                          std::to_string(target_m) + " edges");
  }
  for (std::size_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(attempt_seed(seed, attempt));
    AdjacencyMatrix adj(n);
    auto order = iota_vector(n);
    rng.shuffle(order);
    for (std::size_t i = 0; i < n; ++i) adj.add(order[i], order[(i + 1) % n]);

    std::size_t failures = 0;
    while (adj.edges().size() < target_m && failures < 256) {
      const std::size_t m = adj.edges().size();
      const std::size_t room = target_m + n - m;
      const std::size_t longest = std::min(n, room);
      if (longest < 3) break;
      const std::size_t len = rng.between(3, longest);
      bool placed = false;
      for (int tries = 0; tries < 32 && !placed; ++tries) {
        auto pick = iota_vector(n);
        rng.shuffle(pick);
        bool ok = true;
        for (std::size_t i = 0; i < len && ok; ++i) {
          ok = !adj.has(pick[i], pick[(i + 1) % len]);
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < len; ++i) adj.add(pick[i], pick[(i + 1) % len]);
        placed = true;
      }
      if (!placed) ++failures;
    }
    const std::size_t m = adj.edges().size();
    const std::size_t gap = m > target_m ? m - target_m : target_m - m;
    if (gap <= n) return Multigraph::build(n, adj.edges());
  }
  fail(ErrorCode::kInvalidArgument,
       "infeasible parameters: could not reach the requested size for random_even_graph");
}

Multigraph random_graph_min_degree(std::size_t n, std::size_t m, std::size_t delta_min, Seed seed) {
  const std::size_t max_m = n * (n - (n > 0 ? 1 : 0)) / 2;
  const bool feasible = n >= 1 && delta_min <= n - 1 && m <= max_m &&
                        2 * m >= n * delta_min && m + 1 >= n;
  if (!feasible) {
    fail(ErrorCode::kInvalidArgument,
         "infeasible parameters (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
             ", delta_min=" + std::to_string(delta_min) + ")");
  }
  for (std::size_t attempt = 0; attempt < 256; ++attempt) {
    Rng rng(attempt_seed(seed, attempt));
    AdjacencyMatrix adj(n);
    auto order = iota_vector(n);
    rng.shuffle(order);
    for (std::size_t i = 1; i < n; ++i) adj.add(order[i], order[rng.below(i)]);

    bool stuck = false;
    while (!stuck) {
      std::size_t needy = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (adj.degree(v) < delta_min && (needy == n || adj.degree(v) < adj.degree(needy))) {
          needy = v;
        }
      }
      if (needy == n) break;
      std::vector<std::size_t> preferred, others;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == needy || adj.has(needy, w)) continue;
        (adj.degree(w) < delta_min ? preferred : others).push_back(w);
      }
      const auto& pool = preferred.empty() ? others : preferred;
      if (pool.empty()) {
        stuck = true;
        break;
      }
      adj.add(needy, pool[rng.below(pool.size())]);
    }
    if (stuck || adj.edges().size() > m) continue;

    std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!adj.has(a, b)) free_pairs.emplace_back(a, b);
      }
    }
    rng.shuffle(free_pairs);
    for (std::size_t i = 0; adj.edges().size() < m; ++i) {
      adj.add(free_pairs[i].first, free_pairs[i].second);
    }
    return Multigraph::build(n, adj.edges());
  }
  fail(ErrorCode::kInvalidArgument, "could not realize the requested minimum degree with " +
                                        std::to_string(m) + " edges");
}

}  // namespace majority::gen
