#include "absspec/enumeration.hpp"

#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "absspec/canonical.hpp"
#include "absspec/graph6.hpp"

namespace absspec {

namespace {

// Child is accepted when deleting the highest-labeled leaf of its canonical
// form reproduces the parent; that makes the parent relation a function of
// the isomorphism class, so every class is reachable exactly once from its
// own parent. The dedup set guards the handful of ties.
std::vector<Graph> grow_trees(const std::vector<Graph>& parents, int n) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const Graph& t : parents) {
    std::string parent_code = canonical_code(t);
    for (int attach = 0; attach < t.order(); ++attach) {
      auto edges = t.edges();
      edges.emplace_back(attach, n - 1);
      Graph child(n, edges);
      Graph canon = canonical_graph(child);
      std::string child_code = graph6_encode(canon);
      if (seen.count(child_code)) continue;
      int drop = -1;
      for (int v = canon.order() - 1; v >= 0; --v) {
        if (canon.degree(v) == 1) {
          drop = v;
          break;
        }
      }
      std::uint64_t keep = ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << drop);
      if (canonical_code(induced_subgraph(canon, keep)) != parent_code) continue;
      seen.insert(child_code);
      out.push_back(std::move(child));
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) raise(errc::bad_params, "tree order must be positive");
  if (n > kMaxTreeOrder)
    raise(errc::too_large, "tree enumeration capped at n = " +
                               std::to_string(kMaxTreeOrder));
  std::vector<Graph> level = {Graph(1, {})};
  for (int k = 2; k <= n; ++k) level = grow_trees(level, k);
  return level;
}

void for_each_in_class(const ClassSpec& spec,
                       const std::function<void(const Graph&)>& fn) {
  if (spec.cycle_rank < 0 || spec.cycle_rank > 2)
    raise(errc::bad_params, "cycle rank must be 0, 1, or 2");
  int cap = spec.cycle_rank == 0   ? kMaxTreeOrder
            : spec.cycle_rank == 1 ? kMaxUnicyclicOrder
                                   : kMaxBicyclicOrder;
  if (spec.n > cap)
    raise(errc::too_large, "cycle rank " + std::to_string(spec.cycle_rank) +
                               " enumeration capped at n = " + std::to_string(cap));

  std::set<std::string> seen;
  auto emit = [&](const Graph& g) {
    if (!matches(g, spec)) return;
    if (!seen.insert(canonical_code(g)).second) return;
    fn(g);
  };

  for (const Graph& tree : enumerate_trees(spec.n)) {
    if (spec.cycle_rank == 0) {
      emit(tree);
      continue;
    }
    std::vector<VertexPair> non_edges;
    for (int u = 0; u < spec.n; ++u)
      for (int v = u + 1; v < spec.n; ++v)
        if (!tree.has_edge(u, v)) non_edges.emplace_back(u, v);

    if (spec.cycle_rank == 1) {
      for (auto extra : non_edges) {
        auto edges = tree.edges();
        edges.push_back(extra);
        emit(Graph(spec.n, edges));
      }
    } else {
      for (std::size_t a = 0; a < non_edges.size(); ++a) {
        for (std::size_t b = a + 1; b < non_edges.size(); ++b) {
          auto edges = tree.edges();
          edges.push_back(non_edges[a]);
          edges.push_back(non_edges[b]);
          emit(Graph(spec.n, edges));
        }
      }
    }
  }
}

std::vector<Graph> enumerate_class(const ClassSpec& spec) {
  std::vector<Graph> out;
  for_each_in_class(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

using SpecKey = std::tuple<int, int, int, int, int, int>;

SpecKey key_of(const ClassSpec& s) {
  auto enc = [](const std::optional<int>& o) { return o ? *o : -1; };
  return {s.n, s.cycle_rank,
          s.bipartite ? static_cast<int>(*s.bipartite) : -1,
          enc(s.girth_eq), enc(s.diameter_max), enc(s.pendant_eq)};
}

}  // namespace

long long count_class(const ClassSpec& spec) {
  static std::mutex mu;
  static std::map<SpecKey, long long> memo;
  SpecKey key = key_of(spec);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  long long count = 0;
  for_each_in_class(spec, [&](const Graph&) { ++count; });
  std::lock_guard<std::mutex> lock(mu);
  memo[key] = count;
  return count;
}

}  // namespace absspec
