#pragma once

#include <string>

#include "absspec/graph.hpp"

namespace absspec {

// Canonical form via individualization-refinement: equitable degree
// refinement, branch on the first smallest non-singleton cell, keep the
// lexicographically least adjacency bitstring over all discrete leaves.
// Automorphisms discovered at equal-code leaves prune sibling branches,
// which keeps high-symmetry inputs (stars and their relatives) cheap.
Graph canonical_graph(const Graph& g);

// graph6 string of canonical_graph(g). Equal codes iff isomorphic.
std::string canonical_code(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace absspec
