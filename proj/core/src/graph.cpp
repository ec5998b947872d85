#include "absspec/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>

namespace absspec {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::out_of_range: return "out_of_range";
    case errc::self_loop: return "self_loop";
    case errc::duplicate_edge: return "duplicate_edge";
    case errc::malformed_graph6: return "malformed_graph6";
    case errc::no_convergence: return "no_convergence";
    case errc::no_root_in_bracket: return "no_root_in_bracket";
    case errc::degree_mismatch: return "degree_mismatch";
    case errc::bad_order: return "bad_order";
    case errc::bad_params: return "bad_params";
    case errc::bad_vertex: return "bad_vertex";
    case errc::not_cyclic: return "not_cyclic";
    case errc::not_bicyclic: return "not_bicyclic";
    case errc::too_large: return "too_large";
    case errc::unknown_name: return "unknown_name";
    case errc::unknown_check: return "unknown_check";
  }
  return "unknown";
}

Graph::Graph(int n, const std::vector<VertexPair>& edges) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    raise(errc::out_of_range, "graph order " + std::to_string(n) +
                                  " not in [1, " + std::to_string(kMaxOrder) + "]");
  adj_.assign(n, 0);
  deg_.assign(n, 0);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      raise(errc::out_of_range, "edge endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) raise(errc::self_loop, "edge " + std::to_string(u) + "-" + std::to_string(v));
    if (adj_[u] >> v & 1)
      raise(errc::duplicate_edge, "edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    ++deg_[u];
    ++deg_[v];
    edges_.emplace_back(u, v);
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    raise(errc::out_of_range, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u] >> v & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return deg_[v];
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbor_list(int v) const {
  return bits_to_vertices(neighbors(v));
}

std::vector<int> bits_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

namespace {

// BFS distances from src; kUnbounded for unreachable vertices.
std::vector<int> bfs_dist(const Graph& g, int src) {
  std::vector<int> dist(g.order(), kUnbounded);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : bits_to_vertices(g.neighbors(u))) {
      if (dist[v] == kUnbounded) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

// Shortest cycle through root, found by BFS with parent edges: the first
// non-tree edge joining two branches closes a cycle of length
// dist[u] + dist[v] + 1. Taking the minimum over all roots gives the girth.
int shortest_cycle_through(const Graph& g, int root) {
  std::vector<int> dist(g.order(), kUnbounded), parent(g.order(), -1);
  dist[root] = 0;
  std::queue<int> q;
  q.push(root);
  int best = kUnbounded;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : bits_to_vertices(g.neighbors(u))) {
      if (dist[v] == kUnbounded) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push(v);
      } else if (v != parent[u]) {
        best = std::min(best, dist[u] + dist[v] + 1);
      }
    }
  }
  return best;
}

}  // namespace

StructuralProfile structural_profile(const Graph& g) {
  StructuralProfile p;
  int n = g.order();

  auto dist0 = bfs_dist(g, 0);
  int reached = 0;
  for (int d : dist0)
    if (d != kUnbounded) ++reached;
  p.connected = reached == n;

  if (p.connected) {
    int diam = 0;
    for (int s = 0; s < n; ++s) {
      auto d = bfs_dist(g, s);
      diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    }
    p.diameter = diam;
  }

  // 2-coloring over every component; disconnected graphs still get a
  // well-defined answer.
  p.bipartite = true;
  std::vector<int> color(n, -1);
  for (int s = 0; s < n && p.bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && p.bipartite) {
      int u = q.front();
      q.pop();
      for (int v : bits_to_vertices(g.neighbors(u))) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          p.bipartite = false;
          break;
        }
      }
    }
  }

  int girth = kUnbounded;
  for (int s = 0; s < n; ++s) girth = std::min(girth, shortest_cycle_through(g, s));
  p.girth = girth;

  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) ++p.pendant_count;

  int components = 0;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    auto d = bfs_dist(g, s);
    for (int v = 0; v < n; ++v)
      if (d[v] != kUnbounded) seen[v] = 1;
  }
  p.cycle_rank = g.edge_count() - n + components;
  return p;
}

bool matches(const Graph& g, const ClassSpec& spec) {
  if (g.order() != spec.n) return false;
  auto p = structural_profile(g);
  if (!p.connected) return false;
  if (p.cycle_rank != spec.cycle_rank) return false;
  if (spec.bipartite && p.bipartite != *spec.bipartite) return false;
  if (spec.girth_eq && p.girth != *spec.girth_eq) return false;
  if (spec.diameter_max && p.diameter > *spec.diameter_max) return false;
  if (spec.pendant_eq && p.pendant_count != *spec.pendant_eq) return false;
  return true;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    raise(errc::bad_params, "permutation length != graph order");
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) raise(errc::bad_params, "not a permutation");
    hit[p] = 1;
  }
  std::vector<VertexPair> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask) {
  auto keep = bits_to_vertices(keep_mask);
  if (keep.empty()) raise(errc::bad_params, "empty vertex set");
  if (keep.back() >= g.order()) raise(errc::out_of_range, "keep mask exceeds graph order");
  std::vector<int> newlab(g.order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) newlab[keep[i]] = i;
  std::vector<VertexPair> edges;
  for (auto [u, v] : g.edges())
    if (newlab[u] != -1 && newlab[v] != -1) edges.emplace_back(newlab[u], newlab[v]);
  return Graph(static_cast<int>(keep.size()), edges);
}

}  // namespace absspec
