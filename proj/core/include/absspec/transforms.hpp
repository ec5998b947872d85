#pragma once

#include "absspec/graph.hpp"

namespace absspec {

// Neighborhood split used by the Kelmans operation: omega1 = N(u) - N[v],
// omega2 = N(v) - N[u], omega3 = N(u) n N(v). Pairwise disjoint bitmasks,
// none containing u or v.
struct KelmansPartition {
  std::uint64_t omega1 = 0;
  std::uint64_t omega2 = 0;
  std::uint64_t omega3 = 0;
};

KelmansPartition kelmans_partition(const Graph& g, int u, int v);

// G_{uv+}: every edge uw with w in omega1 is rerouted to vw. Order and edge
// count are preserved; omega1 empty returns an equal labeled graph.
Graph kelmans(const Graph& g, int u, int v);

// Iteratively strips degree-1 vertices; returns the 2-core relabeled in
// ascending order of surviving original label. Requires cycle rank >= 1.
Graph core_subgraph(const Graph& g);

}  // namespace absspec
