#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "absspec/graph6.hpp"

namespace oracle {

std::string brute_canonical_code(const absspec::Graph& g) {
  int n = g.order();
  if (n > 8) throw std::runtime_error("brute canonical capped at n = 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code = absspec::graph6_encode(absspec::apply_permutation(g, perm));
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::set<std::string> naive_class_codes(const absspec::ClassSpec& spec) {
  int n = spec.n;
  if (n > 6) throw std::runtime_error("naive enumeration capped at n = 6");
  int m = n - 1 + spec.cycle_rank;
  std::vector<absspec::VertexPair> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  int slots = static_cast<int>(all_pairs.size());
  std::set<std::string> codes;
  for (unsigned mask = 0; mask < (1u << slots); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<absspec::VertexPair> edges;
    for (int i = 0; i < slots; ++i)
      if (mask >> i & 1) edges.push_back(all_pairs[i]);
    absspec::Graph g(n, edges);
    if (absspec::matches(g, spec)) codes.insert(brute_canonical_code(g));
  }
  return codes;
}

namespace {

absspec::RealPoly poly_det(std::vector<std::vector<absspec::RealPoly>> m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  absspec::RealPoly det;
  double sign = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<absspec::RealPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<absspec::RealPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    det = det + sign * (m[0][col] * poly_det(std::move(minor)));
    sign = -sign;
  }
  return det;
}

}  // namespace

absspec::RealPoly charpoly(const absspec::SymMatrix& m) {
  int n = m.order();
  if (n > 6) throw std::runtime_error("charpoly oracle capped at n = 6");
  std::vector<std::vector<absspec::RealPoly>> entries(
      n, std::vector<absspec::RealPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries[i][j] = i == j ? absspec::RealPoly({-m(i, i), 1.0})
                             : absspec::RealPoly({-m(i, j)});
  return poly_det(std::move(entries));
}

bool bipartite_by_odd_walks(const absspec::Graph& g) {
  int n = g.order();
  using Mat = std::vector<std::vector<long long>>;
  Mat a(n, std::vector<long long>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  auto mul = [n](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (x[i][k])
          for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  Mat power = a;
  for (int k = 1; k <= n; ++k) {
    if (k % 2 == 1) {
      long long trace = 0;
      for (int i = 0; i < n; ++i) trace += power[i][i];
      if (trace != 0) return false;
    }
    if (k < n) power = mul(power, a);
  }
  return true;
}

}  // namespace oracle
