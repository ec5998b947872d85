#include "absspec/poly.hpp"

#include <algorithm>
#include <cmath>

namespace absspec {

RealPoly::RealPoly(std::vector<double> ascending) : c_(std::move(ascending)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

RealPoly RealPoly::monomial(int k, double c) {
  if (k < 0) raise(errc::bad_params, "negative monomial degree");
  std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
  v.back() = c;
  return RealPoly(std::move(v));
}

double RealPoly::coeff(int k) const {
  if (k < 0) raise(errc::bad_params, "negative coefficient index");
  return k < static_cast<int>(c_.size()) ? c_[k] : 0.0;
}

double RealPoly::operator()(double x) const {
  double y = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) y = y * x + c_[i];
  return y;
}

RealPoly RealPoly::derivative() const {
  if (c_.size() <= 1) return RealPoly();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
  return RealPoly(std::move(d));
}

RealPoly RealPoly::operator+(const RealPoly& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RealPoly(std::move(r));
}

RealPoly RealPoly::operator-(const RealPoly& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RealPoly(std::move(r));
}

RealPoly RealPoly::operator*(const RealPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RealPoly();
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RealPoly(std::move(r));
}

RealPoly RealPoly::operator*(double s) const {
  std::vector<double> r = c_;
  for (double& x : r) x *= s;
  return RealPoly(std::move(r));
}

namespace {

double bisect(const RealPoly& p, double lo, double hi) {
  double flo = p(lo);
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    double fmid = p(mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0.0) != (fmid < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double largest_real_root(const RealPoly& p, double bracket_hi) {
  if (p.degree() < 1) raise(errc::bad_params, "polynomial has no roots to find");
  if (!(bracket_hi > 0.0)) raise(errc::bad_params, "bracket must be positive");
  const double step = 1e-2;
  double x_prev = bracket_hi;
  double f_prev = p(x_prev);
  if (f_prev == 0.0) return x_prev;
  for (double x = bracket_hi - step; x >= -bracket_hi - step * 0.5; x -= step) {
    double f = p(x);
    if (f == 0.0) return x;
    if ((f < 0.0) != (f_prev < 0.0)) return bisect(p, x, x_prev);
    x_prev = x;
    f_prev = f;
  }
  raise(errc::no_root_in_bracket,
        "no sign change in [-" + std::to_string(bracket_hi) + ", " +
            std::to_string(bracket_hi) + "]");
}

std::vector<double> real_roots(const RealPoly& p) {
  if (p.degree() < 1) raise(errc::bad_params, "need degree >= 1");
  if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};

  double amax = 0.0;
  for (double c : p.coeffs()) amax = std::max(amax, std::abs(c));
  double lead = std::abs(p.coeffs().back());
  double cauchy = 1.0 + amax / lead;

  std::vector<double> cuts = real_roots(p.derivative());
  std::vector<double> grid;
  grid.push_back(-cauchy);
  for (double c : cuts)
    if (c > -cauchy && c < cauchy) grid.push_back(c);
  grid.push_back(cauchy);

  const double touch_tol = 1e-8 * (1.0 + amax);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double a = grid[i], b = grid[i + 1];
    double fa = p(a), fb = p(b);
    if (std::abs(fa) <= touch_tol && i == 0) roots.push_back(a);
    if ((fa < 0.0) != (fb < 0.0) && fa != 0.0 && fb != 0.0) {
      roots.push_back(bisect(p, a, b));
    }
    // p is monotone on (a, b); a critical point with negligible value is an
    // even-order touch, counted once.
    if (std::abs(fb) <= touch_tol) roots.push_back(b);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-9) out.push_back(r);
  return out;
}

}  // namespace absspec
