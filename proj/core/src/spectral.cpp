#include "absspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace absspec {

SymMatrix abs_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) {
    double ds = g.degree(u) + g.degree(v);
    m.set(u, v, std::sqrt(1.0 - 2.0 / ds));
  }
  return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

double abs_index(const Graph& g) {
  SymMatrix m = abs_matrix(g);
  double s = 0.0;
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) s += m(i, j);
  return s / 2;
}

bool spectrum_matches_factorization(const SymMatrix& m,
                                    const std::vector<FactorTerm>& factors,
                                    double tol,
                                    double* max_abs_diff) {
  long long total_degree = 0;
  for (const auto& f : factors) {
    if (f.poly.degree() < 0) raise(errc::bad_params, "zero polynomial factor");
    if (f.multiplicity < 0) raise(errc::bad_params, "negative multiplicity");
    total_degree += static_cast<long long>(f.poly.degree()) * f.multiplicity;
  }
  if (total_degree != m.order())
    raise(errc::degree_mismatch,
          "factor degrees sum to " + std::to_string(total_degree) +
              ", matrix order is " + std::to_string(m.order()));

  std::vector<double> expected;
  for (const auto& f : factors) {
    if (f.poly.degree() < 1 || f.multiplicity == 0) continue;
    auto roots = real_roots(f.poly);
    for (double r : roots)
      for (int k = 0; k < f.multiplicity; ++k) expected.push_back(r);
  }
  auto spec = eigenvalues(m);
  if (expected.size() != spec.values.size()) {
    // Complex or coincident factor roots: the claim cannot be matched.
    if (max_abs_diff) *max_abs_diff = std::numeric_limits<double>::infinity();
    return false;
  }
  std::sort(expected.begin(), expected.end(), std::greater<>());
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    worst = std::max(worst, std::abs(expected[i] - spec.values[i]));
  if (max_abs_diff) *max_abs_diff = worst;
  return worst <= tol;
}

}  // namespace absspec
