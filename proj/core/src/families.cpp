#include "absspec/families.hpp"

#include <cmath>
#include <string>

#include "absspec/canonical.hpp"
#include "absspec/transforms.hpp"

namespace absspec {

namespace {

void need_order(int n, int min_n, const char* who) {
  if (n < min_n)
    raise(errc::bad_order, std::string(who) + " needs n >= " + std::to_string(min_n) +
                               ", got " + std::to_string(n));
}

}  // namespace

Graph h1_bip(int n) {
  need_order(n, 5, "h1_bip");
  std::vector<VertexPair> e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (int j = 4; j < n; ++j) e.emplace_back(0, j);
  return Graph(n, e);
}

Graph h2_bip(int n) {
  need_order(n, 6, "h2_bip");
  std::vector<VertexPair> e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}};
  for (int j = 5; j < n; ++j) e.emplace_back(0, j);
  return Graph(n, e);
}

Graph b_infinity(int p, int l, int q) {
  if (p < 3 || q < 3 || l < 1)
    raise(errc::bad_params, "b_infinity needs p,q >= 3 and l >= 1");
  std::vector<VertexPair> e;
  for (int j = 0; j < p - 1; ++j) e.emplace_back(j, j + 1);
  e.emplace_back(p - 1, 0);
  if (l == 1) {
    // Shared vertex: the second cycle runs 0, p, ..., p+q-2 back to 0.
    e.emplace_back(0, p);
    for (int j = p; j < p + q - 2; ++j) e.emplace_back(j, j + 1);
    e.emplace_back(p + q - 2, 0);
  } else {
    int c2 = p + l - 2;  // first vertex of the second cycle
    e.emplace_back(0, p);
    for (int j = p; j < c2; ++j) e.emplace_back(j, j + 1);
    for (int j = c2; j < c2 + q - 1; ++j) e.emplace_back(j, j + 1);
    e.emplace_back(c2 + q - 1, c2);
  }
  return Graph(p + q + l - 2, e);
}

Graph b_theta(int p, int l, int q) {
  if (p < 0 || l < 0 || q < 0)
    raise(errc::bad_params, "b_theta needs nonnegative path lengths");
  if ((p == 0) + (l == 0) + (q == 0) > 1)
    raise(errc::bad_params, "b_theta allows at most one zero-length path");
  std::vector<VertexPair> e;
  int next = 2;
  for (int len : {p, l, q}) {
    if (len == 0) {
      e.emplace_back(0, 1);
      continue;
    }
    e.emplace_back(0, next);
    for (int j = 0; j < len - 1; ++j, ++next) e.emplace_back(next, next + 1);
    e.emplace_back(next, 1);
    ++next;
  }
  return Graph(p + l + q + 2, e);
}

Graph p_path(int n, int d, int i) {
  if (d < 2 || i < 2 || i > d || n < d + 1)
    raise(errc::bad_params, "p_path needs d >= 2, 2 <= i <= d, n >= d+1");
  std::vector<VertexPair> e;
  for (int j = 0; j < d; ++j) e.emplace_back(j, j + 1);
  for (int j = d + 1; j < n; ++j) e.emplace_back(i - 1, j);
  return Graph(n, e);
}

Graph p_star(int n, int d, int i) {
  if (n < d + 2) raise(errc::bad_params, "p_star needs n >= d+2");
  Graph base = p_path(n, d, i);
  auto e = base.edges();
  e.emplace_back(i - 2, n - 1);
  e.emplace_back(i, n - 1);
  return Graph(n, e);
}

Graph p_double_star(int n, int d, int i) {
  if (n < d + 3) raise(errc::bad_params, "p_double_star needs n >= d+3");
  Graph base = p_path(n, d, i);
  auto e = base.edges();
  e.emplace_back(i - 2, n - 2);
  e.emplace_back(i - 2, n - 1);
  return Graph(n, e);
}

Graph g1(int n) {
  need_order(n, 5, "g1");
  std::vector<VertexPair> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
  for (int j = 4; j < n; ++j) e.emplace_back(0, j);
  return Graph(n, e);
}

Graph g2(int n) {
  need_order(n, 5, "g2");
  std::vector<VertexPair> e = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
  for (int j = 5; j < n; ++j) e.emplace_back(0, j);
  return Graph(n, e);
}

namespace {

bool gamma_membership(const Graph& g, const Graph& wanted_core, int pendant_deficit) {
  auto p = structural_profile(g);
  if (!p.connected || p.cycle_rank != 2)
    raise(errc::not_bicyclic, "gamma classes contain connected bicyclic graphs only");
  if (p.girth != 3 || p.diameter > 4) return false;
  if (p.pendant_count != g.order() - pendant_deficit) return false;
  return is_isomorphic(core_subgraph(g), wanted_core);
}

}  // namespace

bool in_gamma_infinity(const Graph& g) {
  return gamma_membership(g, b_infinity(3, 1, 3), 5);
}

bool in_gamma_theta(const Graph& g) {
  return gamma_membership(g, b_theta(1, 1, 0), 4);
}

long long h1_radicand(int n) {
  need_order(n, 5, "h1_radicand");
  if (n > 1418) raise(errc::too_large, "radicand overflows 64-bit past n = 1418");
  long long m = n;
  // Horner on n^6 - 12n^5 + 58n^4 - 108n^3 + 41n^2 + 40n + 16.
  return (((((m - 12) * m + 58) * m - 108) * m + 41) * m + 40) * m + 16;
}

double eta1_sq_h1_closed_form(int n) {
  long long a = h1_radicand(n);
  long long num = ((static_cast<long long>(n) - 4) * n + 5) * n + 4;
  long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(a))));
  while (s > 0 && static_cast<__int128>(s) * s > a) --s;
  while (static_cast<__int128>(s + 1) * (s + 1) <= a) ++s;
  double root = (s * s == a) ? static_cast<double>(s) : std::sqrt(static_cast<double>(a));
  return (static_cast<double>(num) + root) / (2.0 * n * (n - 1));
}

RealPoly paper_poly(PaperPoly name, int n) {
  need_order(n, 5, "paper_poly");
  double nn = n;
  switch (name) {
    case PaperPoly::zeta:
      return RealPoly({5 - nn, 0, 3 * nn - 13, 0, -nn, 0, 1});
    case PaperPoly::phi_pstar:
      return RealPoly({3 * nn - 17, -4, -nn, 0, 1});
    case PaperPoly::rho_pss:
      return RealPoly({3 * nn - 13, -4, -(nn + 1), 0, 1});
    case PaperPoly::psi_g2: {
      long long m = n;
      double c3 = 2.0 * m * (m + 1);
      double c2 = -std::sqrt(2.0) * m * (m + 1);
      double c1 = -2.0 * (((m - 2) * m - 1) * m + 10);
      double c0 = std::sqrt(2.0) * (((m - 6) * m + 3) * m + 10);
      return RealPoly({c0, c1, c2, c3});
    }
    case PaperPoly::phi_g1: {
      long long m = n;
      double c2 = -static_cast<double>((((5 * m + 6) * m - 7) * m + 52) * m + 80) /
                  (5.0 * m * (m + 2) * (m + 1));
      double c1 = -0.8 * std::sqrt(15.0 * m * (m - 1) /
                                   (static_cast<double>(m + 2) * (m + 1)));
      double c0 = 1.2 * (m - 2) * (m - 4) / static_cast<double>(m);
      return RealPoly({c0, c1, c2, 0, 1});
    }
  }
  raise(errc::unknown_name, "unhandled polynomial name");
}

PaperPoly paper_poly_from_token(std::string_view token) {
  if (token == "zeta") return PaperPoly::zeta;
  if (token == "phi-pstar") return PaperPoly::phi_pstar;
  if (token == "rho-pss") return PaperPoly::rho_pss;
  if (token == "psi-g2") return PaperPoly::psi_g2;
  if (token == "phi-g1") return PaperPoly::phi_g1;
  raise(errc::unknown_name, "polynomial token '" + std::string(token) + "'");
}

const char* paper_poly_token(PaperPoly name) {
  switch (name) {
    case PaperPoly::zeta: return "zeta";
    case PaperPoly::phi_pstar: return "phi-pstar";
    case PaperPoly::rho_pss: return "rho-pss";
    case PaperPoly::psi_g2: return "psi-g2";
    case PaperPoly::phi_g1: return "phi-g1";
  }
  return "?";
}

Graph charpoly_claim_graph(PaperPoly name, int n) {
  switch (name) {
    case PaperPoly::zeta: return h2_bip(n);
    case PaperPoly::phi_pstar: return p_star(n, 4, 3);
    case PaperPoly::rho_pss: return p_double_star(n, 3, 3);
    case PaperPoly::psi_g2: return g2(n);
    case PaperPoly::phi_g1: return g1(n);
  }
  raise(errc::unknown_name, "unhandled polynomial name");
}

bool charpoly_claim_uses_abs(PaperPoly name) {
  return name == PaperPoly::psi_g2 || name == PaperPoly::phi_g1;
}

int charpoly_claim_min_n(PaperPoly name) {
  return name == PaperPoly::phi_g1 ? 5 : 6;
}

std::vector<FactorTerm> charpoly_claim_factors(PaperPoly name, int n) {
  need_order(n, charpoly_claim_min_n(name), "charpoly_claim_factors");
  RealPoly x = RealPoly::monomial(1);
  std::vector<FactorTerm> f;
  switch (name) {
    case PaperPoly::zeta:
      f.push_back({x, n - 6});
      break;
    case PaperPoly::phi_pstar:
      f.push_back({x, n - 6});
      f.push_back({RealPoly({-1, 0, 1}), 1});
      break;
    case PaperPoly::rho_pss:
      f.push_back({x, n - 4});
      break;
    case PaperPoly::psi_g2: {
      double r = 1.0 / std::sqrt(2.0);
      f.push_back({x, n - 6});
      f.push_back({RealPoly({r, 1}), 2});
      f.push_back({RealPoly({-r, 1}), 1});
      break;
    }
    case PaperPoly::phi_g1:
      f.push_back({x, n - 4});
      break;
  }
  f.push_back({paper_poly(name, n), 1});
  return f;
}

Graph family_from_token(std::string_view token) {
  auto colon = token.find(':');
  if (colon == std::string_view::npos)
    raise(errc::unknown_name, "family token needs '<name>:<params>'");
  std::string name(token.substr(0, colon));
  std::string params(token.substr(colon + 1));

  auto parse_int = [](const std::string& s) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(s, &used);
    } catch (const std::exception&) {
      raise(errc::bad_params, "expected integer, got '" + s + "'");
    }
    if (used != s.size()) raise(errc::bad_params, "trailing junk in '" + s + "'");
    return value;
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      out.push_back(s.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  };

  if (name == "h1" || name == "h2" || name == "g1" || name == "g2") {
    int n = parse_int(params);
    if (name == "h1") return h1_bip(n);
    if (name == "h2") return h2_bip(n);
    if (name == "g1") return g1(n);
    return g2(n);
  }
  if (name == "binf" || name == "btheta") {
    auto parts = split(params);
    if (parts.size() != 3)
      raise(errc::bad_params, name + " needs three comma-separated integers");
    int p = parse_int(parts[0]), l = parse_int(parts[1]), q = parse_int(parts[2]);
    return name == "binf" ? b_infinity(p, l, q) : b_theta(p, l, q);
  }
  if (name == "ppath" || name == "pstar" || name == "pss") {
    int n = -1, d = -1, i = -1;
    for (const auto& kv : split(params)) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        raise(errc::bad_params, "expected key=value, got '" + kv + "'");
      std::string key = kv.substr(0, eq);
      int value = parse_int(kv.substr(eq + 1));
      if (key == "n") n = value;
      else if (key == "d") d = value;
      else if (key == "i") i = value;
      else raise(errc::bad_params, "unknown key '" + key + "'");
    }
    if (n < 0 || d < 0 || i < 0)
      raise(errc::bad_params, name + " needs n=, d=, i=");
    if (name == "ppath") return p_path(n, d, i);
    if (name == "pstar") return p_star(n, d, i);
    return p_double_star(n, d, i);
  }
  raise(errc::unknown_name, "family '" + name + "'");
}

}  // namespace absspec
