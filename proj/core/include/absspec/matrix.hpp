#pragma once

#include <vector>

#include "absspec/error.hpp"

namespace absspec {

// Dense symmetric matrix, full storage. set() writes both mirror entries so
// the invariant cannot drift.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const;
  void set(int i, int j, double value);

  double frobenius_norm() const;
  double offdiag_frobenius_norm() const;
  double trace() const;

 private:
  void check_index(int i) const;

  int n_;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> values;  // non-increasing
  double residual = 0.0;       // largest |off-diagonal| left at convergence
};

// Cyclic Jacobi rotations, sweeping the upper triangle row by row.
// Converged when the off-diagonal Frobenius norm drops below
// 1e-12 * ||M||_F; throws no_convergence after 100 sweeps.
Spectrum eigenvalues(const SymMatrix& m);

// Largest eigenvalue. For the nonnegative symmetric matrices this library
// works with, Perron-Frobenius makes that the spectral radius proper, and
// defining it this way sidesteps the sign symmetry of bipartite spectra.
double spectral_radius(const SymMatrix& m);

}  // namespace absspec
