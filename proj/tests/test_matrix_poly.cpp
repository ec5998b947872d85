#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "absspec/error.hpp"
#include "absspec/families.hpp"
#include "absspec/graph.hpp"
#include "absspec/matrix.hpp"
#include "absspec/poly.hpp"
#include "absspec/spectral.hpp"
#include "oracles.hpp"

using absspec::Graph;
using absspec::RealPoly;
using absspec::SymMatrix;

TEST_CASE("symmetric matrix basics") {
  SymMatrix m(3);
  m.set(0, 2, 1.5);
  CHECK(m(0, 2) == 1.5);
  CHECK(m(2, 0) == 1.5);
  CHECK(m(1, 1) == 0.0);
  CHECK(m.order() == 3);
  CHECK_THROWS_AS(SymMatrix(0), absspec::Error);
  CHECK_THROWS_AS(m(3, 0), absspec::Error);
  CHECK(m.frobenius_norm() == doctest::Approx(std::sqrt(2 * 1.5 * 1.5)));
}

TEST_CASE("eigenvalues of small matrices") {
  SymMatrix zero(3);
  auto sp = absspec::eigenvalues(zero);
  CHECK(sp.values == std::vector<double>{0.0, 0.0, 0.0});

  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto adj = absspec::eigenvalues(absspec::adjacency_matrix(c4));
  REQUIRE(adj.values.size() == 4);
  CHECK(adj.values[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(adj.values[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(adj.values[2] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(adj.values[3] == doctest::Approx(-2.0).epsilon(1e-10));

  auto abs4 = absspec::eigenvalues(absspec::abs_matrix(c4));
  CHECK(abs4.values[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(abs4.values[3] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));

  SymMatrix one(1);
  CHECK(absspec::eigenvalues(one).values == std::vector<double>{0.0});
}

TEST_CASE("eigenvalue residual and trace invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<absspec::VertexPair> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g(n, edges);
    for (const SymMatrix& m : {absspec::abs_matrix(g), absspec::adjacency_matrix(g)}) {
      auto sp = absspec::eigenvalues(m);
      CHECK(sp.residual <= 1e-12 * std::max(1.0, m.frobenius_norm()));
      double sum = 0;
      for (double v : sp.values) sum += v;
      CHECK(std::abs(sum) <= 1e-9 * n);
      // sorted non-increasing
      for (std::size_t i = 1; i < sp.values.size(); ++i)
        CHECK(sp.values[i - 1] >= sp.values[i]);
    }
  }
}

TEST_CASE("spectrum agrees with determinant-expansion charpoly") {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 200) {
    int n = 2 + static_cast<int>(rng() % 5);  // 2..6, oracle cap
    std::vector<absspec::VertexPair> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g(n, edges);
    ++done;
    for (const SymMatrix& m : {absspec::abs_matrix(g), absspec::adjacency_matrix(g)}) {
      RealPoly expected = oracle::charpoly(m);
      RealPoly from_spectrum({1.0});
      for (double v : absspec::eigenvalues(m).values)
        from_spectrum = from_spectrum * RealPoly({-v, 1.0});
      double scale = 1.0;
      for (int k = 0; k <= expected.degree(); ++k)
        scale = std::max(scale, std::abs(expected.coeff(k)));
      REQUIRE(from_spectrum.degree() == n);
      for (int k = 0; k <= n; ++k)
        CHECK(std::abs(from_spectrum.coeff(k) - expected.coeff(k)) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  RealPoly p({-2.0, 0.0, 1.0});  // x^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p(3.0) == 7.0);
  CHECK(p.derivative() == RealPoly({0.0, 2.0}));
  CHECK(p * RealPoly({1.0, 1.0}) == RealPoly({-2.0, -2.0, 1.0, 1.0}));
  CHECK(p + RealPoly({2.0}) == RealPoly({0.0, 0.0, 1.0}));
  CHECK(3.0 * RealPoly({1.0, 1.0}) == RealPoly({3.0, 3.0}));
  CHECK(RealPoly::monomial(3, 2.0) == RealPoly({0.0, 0.0, 0.0, 2.0}));
  // trailing zeros are stripped
  CHECK(RealPoly({1.0, 0.0, 0.0}).degree() == 0);
  CHECK(RealPoly(std::vector<double>{}).degree() == -1);
}

TEST_CASE("largest_real_root") {
  RealPoly p({-2.0, 0.0, 1.0});
  CHECK(absspec::largest_real_root(p, 10.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // psi at n = 5 is 60x^3 - 30 sqrt(2) x^2 - 160x; largest root (3 sqrt 2 + sqrt 402)/12
  RealPoly psi5 = absspec::paper_poly(absspec::PaperPoly::psi_g2, 5);
  double expected = (3.0 * std::sqrt(2.0) + std::sqrt(402.0)) / 12.0;
  CHECK(absspec::largest_real_root(psi5, 6.0) == doctest::Approx(expected).epsilon(1e-10));

  // 2.1637 is a truncated display of the root 2.16378...
  RealPoly quartic5 = absspec::paper_poly(absspec::PaperPoly::phi_g1, 5);
  double root = absspec::largest_real_root(quartic5, 6.0);
  CHECK(root >= 2.1637);
  CHECK(root < 2.1638);

  CHECK_THROWS_AS(absspec::largest_real_root(RealPoly({1.0, 0.0, 1.0}), 10.0),
                  absspec::Error);
  CHECK_THROWS_AS(absspec::largest_real_root(RealPoly({1.0}), 10.0), absspec::Error);
}

TEST_CASE("real_roots returns distinct roots ascending") {
  // (x^2 - 1)(x - 3) = x^3 - 3x^2 - x + 3
  auto roots = absspec::real_roots(RealPoly({3.0, -1.0, -3.0, 1.0}));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(roots[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(roots[2] == doctest::Approx(3.0).epsilon(1e-9));

  // double root: (x - 1)^2
  auto touch = absspec::real_roots(RealPoly({1.0, -2.0, 1.0}));
  REQUIRE(touch.size() == 1);
  CHECK(touch[0] == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(absspec::real_roots(RealPoly({1.0, 0.0, 1.0})).empty());
  auto linear = absspec::real_roots(RealPoly({-4.0, 2.0}));
  REQUIRE(linear.size() == 1);
  CHECK(linear[0] == doctest::Approx(2.0));
}
