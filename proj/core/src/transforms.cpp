#include "absspec/transforms.hpp"

#include <bit>
#include <string>

namespace absspec {

namespace {

void need_pair(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    raise(errc::bad_vertex, "vertex outside 0.." + std::to_string(g.order() - 1));
  if (u == v) raise(errc::bad_vertex, "u and v must differ");
}

}  // namespace

KelmansPartition kelmans_partition(const Graph& g, int u, int v) {
  need_pair(g, u, v);
  std::uint64_t nu = g.neighbors(u);
  std::uint64_t nv = g.neighbors(v);
  std::uint64_t closed_v = nv | std::uint64_t{1} << v;
  std::uint64_t closed_u = nu | std::uint64_t{1} << u;
  KelmansPartition p;
  p.omega1 = nu & ~closed_v;
  p.omega2 = nv & ~closed_u;
  p.omega3 = nu & nv;
  return p;
}

Graph kelmans(const Graph& g, int u, int v) {
  auto part = kelmans_partition(g, u, v);
  std::vector<VertexPair> edges;
  edges.reserve(g.edge_count());
  for (auto [a, b] : g.edges()) {
    int w = -1;
    if (a == u && (part.omega1 >> b & 1)) w = b;
    if (b == u && (part.omega1 >> a & 1)) w = a;
    if (w >= 0) {
      edges.emplace_back(v, w);
    } else {
      edges.emplace_back(a, b);
    }
  }
  return Graph(g.order(), edges);
}

Graph core_subgraph(const Graph& g) {
  auto profile = structural_profile(g);
  if (profile.cycle_rank < 1)
    raise(errc::not_cyclic, "2-core is empty for acyclic input");
  std::uint64_t keep = g.order() == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << g.order()) - 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!(keep >> v & 1)) continue;
      if (std::popcount(g.neighbors(v) & keep) <= 1) {
        keep &= ~(std::uint64_t{1} << v);
        changed = true;
      }
    }
  }
  return induced_subgraph(g, keep);
}

}  // namespace absspec
