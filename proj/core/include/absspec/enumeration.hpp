#pragma once

#include <functional>

#include "absspec/graph.hpp"

namespace absspec {

// Hard caps keeping the full verification suite in the minutes range.
inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxUnicyclicOrder = 11;
inline constexpr int kMaxBicyclicOrder = 10;

// All unlabeled trees on n vertices, one representative per isomorphism
// class, by leaf augmentation of the (n-1)-trees with canonical-deletion
// parent matching. Deterministic order. 1 <= n <= 12.
std::vector<Graph> enumerate_trees(int n);

// Every connected isomorphism class matching spec, exactly once: each tree
// on spec.n vertices gets every set of spec.cycle_rank non-edges, filtered
// through matches() and deduplicated by canonical code. The emission order
// is fixed by the tree order and lexicographic non-edge order.
void for_each_in_class(const ClassSpec& spec,
                       const std::function<void(const Graph&)>& fn);

std::vector<Graph> enumerate_class(const ClassSpec& spec);

// Stream length; memoized per spec, safe for concurrent callers.
long long count_class(const ClassSpec& spec);

}  // namespace absspec
