#pragma once

#include "absspec/graph.hpp"
#include "absspec/matrix.hpp"
#include "absspec/poly.hpp"

namespace absspec {

// Entry (i,j) = sqrt(1 - 2/(d_i + d_j)) for each edge ij, 0 elsewhere.
SymMatrix abs_matrix(const Graph& g);

SymMatrix adjacency_matrix(const Graph& g);

// Sum of ABS edge weights. Computed as (sum of all matrix entries)/2 so it
// agrees with that expression exactly, not just to rounding.
double abs_index(const Graph& g);

struct FactorTerm {
  RealPoly poly;
  int multiplicity = 1;
};

// True iff the eigenvalue multiset of m equals the root multiset of the
// factor system (each factor's real roots, repeated by multiplicity) after
// sorting both, with max absolute discrepancy <= tol. The factor degrees
// must sum (weighted by multiplicity) to the matrix order.
bool spectrum_matches_factorization(const SymMatrix& m,
                                    const std::vector<FactorTerm>& factors,
                                    double tol,
                                    double* max_abs_diff = nullptr);

}  // namespace absspec
