#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absspec/error.hpp"

namespace absspec {

// Orders stay small enough that one 64-bit word per adjacency row suffices;
// 62 is also the ceiling for the short graph6 header.
inline constexpr int kMaxOrder = 62;

// Marker for "no finite value" (girth of a forest, diameter of a
// disconnected graph). Large but safe to compare and add small ints to.
inline constexpr int kUnbounded = 1 << 30;

using VertexPair = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// The edge list keeps construction order and endpoint orientation, which the
// CLI relies on; adjacency queries go through the bitset rows.
class Graph {
 public:
  Graph(int n, const std::vector<VertexPair>& edges);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::uint64_t neighbors(int v) const;
  std::vector<int> neighbor_list(int v) const;

  const std::vector<int>& degrees() const noexcept { return deg_; }
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> deg_;
  std::vector<VertexPair> edges_;
};

struct StructuralProfile {
  bool connected = false;
  bool bipartite = false;
  int girth = kUnbounded;
  int diameter = kUnbounded;
  int pendant_count = 0;
  int cycle_rank = 0;
};

StructuralProfile structural_profile(const Graph& g);

// Constraint bundle used by the enumeration module and the CLI filter
// syntax. Unset optionals mean "don't care". Connectivity is implied.
struct ClassSpec {
  int n = 0;
  int cycle_rank = 0;
  std::optional<bool> bipartite;
  std::optional<int> girth_eq;
  std::optional<int> diameter_max;
  std::optional<int> pendant_eq;
};

bool matches(const Graph& g, const ClassSpec& spec);

// Relabels g by perm (perm[old] = new). perm must be a permutation of 0..n-1.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// Induced subgraph on the vertices set in keep_mask, relabeled in ascending
// order of old label. The mask must be nonempty.
Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask);

std::vector<int> bits_to_vertices(std::uint64_t mask);

}  // namespace absspec
