#pragma once

#include <vector>

#include "absspec/error.hpp"

namespace absspec {

// Real polynomial with ascending coefficients (coeffs()[k] multiplies x^k).
// Trailing zero coefficients are stripped on construction; the zero
// polynomial has degree -1.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<double> ascending);
  static RealPoly monomial(int k, double c = 1.0);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  double coeff(int k) const;
  const std::vector<double>& coeffs() const noexcept { return c_; }

  double operator()(double x) const;
  RealPoly derivative() const;

  RealPoly operator+(const RealPoly& o) const;
  RealPoly operator-(const RealPoly& o) const;
  RealPoly operator*(const RealPoly& o) const;
  RealPoly operator*(double s) const;
  bool operator==(const RealPoly& o) const = default;

 private:
  std::vector<double> c_;
};

inline RealPoly operator*(double s, const RealPoly& p) { return p * s; }

// Scans [-bracket_hi, bracket_hi] from the top down in steps of 1e-2 for a
// sign change, then bisects that cell to width 1e-12. The grid step is part
// of the contract: root pairs closer than 1e-2 with no net sign change are
// out of scope. Throws no_root_in_bracket when the scan finds nothing.
double largest_real_root(const RealPoly& p, double bracket_hi);

// Distinct real roots in ascending order, located by recursing on the
// derivative for critical points and bisecting between them inside the
// Cauchy bound. Even-order touches are picked up at critical points where
// |p| is negligible. Degree must be at least 1.
std::vector<double> real_roots(const RealPoly& p);

}  // namespace absspec
