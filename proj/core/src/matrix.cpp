#include "absspec/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace absspec {

SymMatrix::SymMatrix(int order) : n_(order) {
  if (order < 1) raise(errc::bad_order, "matrix order must be positive");
  a_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

void SymMatrix::check_index(int i) const {
  if (i < 0 || i >= n_)
    raise(errc::out_of_range, "matrix index " + std::to_string(i));
}

double SymMatrix::operator()(int i, int j) const {
  check_index(i);
  check_index(j);
  return a_[static_cast<std::size_t>(i) * n_ + j];
}

void SymMatrix::set(int i, int j, double value) {
  check_index(i);
  check_index(j);
  a_[static_cast<std::size_t>(i) * n_ + j] = value;
  a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::offdiag_frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) {
        double x = a_[static_cast<std::size_t>(i) * n_ + j];
        s += x * x;
      }
  return std::sqrt(s);
}

double SymMatrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += a_[static_cast<std::size_t>(i) * n_ + i];
  return s;
}

Spectrum eigenvalues(const SymMatrix& m) {
  int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  const double norm = m.frobenius_norm();
  const double target = 1e-12 * norm;

  auto offdiag = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  bool converged = n == 1 || offdiag() <= target;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        // Stable rotation angle choice from Golub & Van Loan.
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
    if (offdiag() <= target) converged = true;
  }
  if (!converged)
    raise(errc::no_convergence, "Jacobi did not converge in 100 sweeps");

  Spectrum out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = at(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) residual = std::max(residual, std::abs(at(i, j)));
  out.residual = residual;
  return out;
}

double spectral_radius(const SymMatrix& m) {
  return eigenvalues(m).values.front();
}

}  // namespace absspec
