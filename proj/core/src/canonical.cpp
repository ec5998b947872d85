#include "absspec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "absspec/graph6.hpp"

namespace absspec {
namespace {

using Partition = std::vector<std::vector<int>>;

Partition initial_partition(const Graph& g) {
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
  Partition p;
  p.reserve(by_degree.size());
  for (auto& [d, cell] : by_degree) p.push_back(std::move(cell));
  return p;
}

// One pass of equitable refinement: find a cell that splits by neighbor
// counts into some splitter cell, apply the split, report whether anything
// changed. Sub-cells are ordered by ascending count, and vertices keep
// their relative order, so the whole procedure is deterministic.
bool refine_step(const Graph& g, Partition& p) {
  for (std::size_t si = 0; si < p.size(); ++si) {
    std::uint64_t smask = 0;
    for (int v : p[si]) smask |= std::uint64_t{1} << v;
    for (std::size_t ci = 0; ci < p.size(); ++ci) {
      if (p[ci].size() < 2) continue;
      std::map<int, std::vector<int>> by_count;
      for (int v : p[ci])
        by_count[std::popcount(g.neighbors(v) & smask)].push_back(v);
      if (by_count.size() < 2) continue;
      Partition sub;
      for (auto& [c, cell] : by_count) sub.push_back(std::move(cell));
      p.erase(p.begin() + static_cast<long>(ci));
      p.insert(p.begin() + static_cast<long>(ci), sub.begin(), sub.end());
      return true;
    }
  }
  return false;
}

void refine(const Graph& g, Partition& p) {
  while (refine_step(g, p)) {
  }
}

struct Searcher {
  const Graph& g;
  int n;
  bool have_best = false;
  std::string best_code;             // column-major upper-triangle bits
  std::vector<int> best_perm;        // vertex -> canonical label
  std::vector<int> best_inv;         // canonical label -> vertex
  std::vector<std::vector<int>> autos;
  std::vector<int> prefix;           // individualized vertices on this path

  explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

  void record_automorphism(std::vector<int> sigma) {
    if (autos.size() < 4096) autos.push_back(std::move(sigma));
  }

  std::string leaf_code(const std::vector<int>& inv) const {
    std::string code;
    code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        code.push_back(g.has_edge(inv[u], inv[v]) ? '1' : '0');
    return code;
  }

  void handle_leaf(const Partition& p) {
    std::vector<int> perm(n), inv(n);
    for (int pos = 0; pos < n; ++pos) {
      inv[pos] = p[pos][0];
      perm[p[pos][0]] = pos;
    }
    std::string code = leaf_code(inv);
    if (!have_best || code < best_code) {
      have_best = true;
      best_code = std::move(code);
      best_perm = std::move(perm);
      best_inv = std::move(inv);
    } else if (code == best_code) {
      // Two labelings with identical images compose to an automorphism.
      std::vector<int> sigma(n);
      for (int v = 0; v < n; ++v) sigma[v] = best_inv[perm[v]];
      record_automorphism(std::move(sigma));
    }
  }

  // Orbits of the subgroup generated by the stored automorphisms that fix
  // the current prefix pointwise. Candidates lying in the orbit of an
  // already-expanded sibling lead to identical subtrees, so skip them.
  // Taking the generated subgroup (union-find over generator action) rather
  // than testing generators one at a time is what keeps large symmetric
  // cells, like the pendant set of a star, linear instead of exponential.
  void stabilizer_orbits(std::vector<int>& uf) {
    uf.resize(n);
    for (int v = 0; v < n; ++v) uf[v] = v;
    auto root = [&uf](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (const auto& sigma : autos) {
      bool fixes = true;
      for (int w : prefix)
        if (sigma[w] != w) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = root(v), b = root(sigma[v]);
        if (a != b) uf[a] = b;
      }
    }
    for (int v = 0; v < n; ++v) uf[v] = root(v);
  }

  void search(Partition p) {
    refine(g, p);
    std::size_t target = p.size();
    std::size_t best_size = static_cast<std::size_t>(n) + 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() >= 2 && p[i].size() < best_size) {
        best_size = p[i].size();
        target = i;
      }
    }
    if (target == p.size()) {
      handle_leaf(p);
      return;
    }
    std::vector<int> tried;
    std::vector<int> uf;
    std::size_t uf_autos = 0;
    const std::vector<int> cell = p[target];
    for (int v : cell) {
      if (!tried.empty()) {
        bool skip = false;
        // swapping twins is an automorphism that fixes every other vertex,
        // so a candidate twinned with an expanded sibling adds nothing
        std::uint64_t nv = g.neighbors(v);
        for (int u : tried)
          if ((g.neighbors(u) & ~(1ULL << v)) == (nv & ~(1ULL << u))) {
            skip = true;
            break;
          }
        if (!skip) {
          // the generator set only grows when a child subtree runs, so the
          // orbit partition can be reused across consecutive pruned siblings
          if (uf.empty() || uf_autos != autos.size()) {
            stabilizer_orbits(uf);
            uf_autos = autos.size();
          }
          for (int u : tried)
            if (uf[u] == uf[v]) {
              skip = true;
              break;
            }
        }
        if (skip) continue;
      }
      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == target) {
          q.push_back({v});
          std::vector<int> rest;
          for (int w : cell)
            if (w != v) rest.push_back(w);
          q.push_back(std::move(rest));
        } else {
          q.push_back(p[i]);
        }
      }
      prefix.push_back(v);
      search(std::move(q));
      prefix.pop_back();
      tried.push_back(v);
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  Searcher s(g);
  s.search(initial_partition(g));
  return apply_permutation(g, s.best_perm);
}

std::string canonical_code(const Graph& g) {
  return graph6_encode(canonical_graph(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace absspec
