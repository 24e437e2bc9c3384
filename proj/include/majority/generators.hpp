#pragma once

#include <cstdint>

#include "majority/graph.hpp"

namespace majority::gen {

using Seed = std::uint64_t;

Multigraph cycle(std::size_t n);
Multigraph path(std::size_t edges);
Multigraph complete(std::size_t n);
Multigraph star(std::size_t leaves);

/// Outer 5-cycle 0..4, spokes i–(i+5), inner pentagram (5+i)–(5+(i+2)%5).
Multigraph petersen();

/// Petersen vertex used as the attachment point of `class2_gadget`.
inline constexpr std::uint32_t kGadgetAttachment = 0;

/// `g_prime` plus a disjoint Petersen copy joined by one bridge from `u` to
/// the copy of Petersen vertex 0. `g_prime` must have no pendant edges.
Multigraph class2_gadget(const Multigraph& g_prime, VertexId u);

/// Connected graph with every degree even and positive, built as a union of
/// edge-disjoint cycles: a spanning cycle first, then random cycles on
/// vertex subsets avoiding existing edges. |E| lands within ±n of
/// `target_m`.
Multigraph random_even_graph(std::size_t n, std::size_t target_m, Seed seed);

/// Connected simple graph with exactly `m` edges and minimum degree at least
/// `delta_min`.
Multigraph random_graph_min_degree(std::size_t n, std::size_t m, std::size_t delta_min, Seed seed);

}  // namespace majority::gen
