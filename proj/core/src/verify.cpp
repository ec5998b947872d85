#include "absspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "absspec/canonical.hpp"
#include "absspec/enumeration.hpp"
#include "absspec/families.hpp"
#include "absspec/graph6.hpp"
#include "absspec/spectral.hpp"
#include "absspec/transforms.hpp"

namespace absspec {

namespace {

using json = nlohmann::ordered_json;

constexpr double kUniqTol = 1e-8;     // uniqueness / near-tie threshold
constexpr double kSignSlack = 1e-6;   // slack for non-integer sign checks
constexpr double kStrictTol = 1e-10;  // strictness margin for eta comparisons

double eta1_of(const Graph& g) { return spectral_radius(abs_matrix(g)); }
double lambda1_of(const Graph& g) { return spectral_radius(adjacency_matrix(g)); }

long long isqrt_floor(long long a) {
  long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(a))));
  while (s > 0 && static_cast<__int128>(s) * s > a) --s;
  while (static_cast<__int128>(s + 1) * (s + 1) <= a) ++s;
  return s;
}

// Exact sign of a + b*sqrt(c) for integer a, b and c >= 0.
int sign_exact(long long a, long long b, long long c) {
  if (c < 0) raise(errc::bad_params, "negative radicand");
  long long s = isqrt_floor(c);
  if (s * s == c) {
    __int128 v = static_cast<__int128>(a) + static_cast<__int128>(b) * s;
    return v > 0 ? 1 : v < 0 ? -1 : 0;
  }
  if (a >= 0 && b >= 0) return (a != 0 || b != 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return (a != 0 || b != 0) ? -1 : 0;
  __int128 lhs = static_cast<__int128>(a) * a;
  __int128 rhs = static_cast<__int128>(b) * b * c;
  if (a > 0) return lhs > rhs ? 1 : lhs < rhs ? -1 : 0;
  return rhs > lhs ? 1 : rhs < lhs ? -1 : 0;
}

// Horner in long double for the inexact-coefficient polynomials.
double eval_ld(const RealPoly& p, long double x) {
  long double y = 0.0L;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) y = y * x + static_cast<long double>(c[i]);
  return static_cast<double>(y);
}

// Smallest sampled derivative over [lo, lo+10], 100 grid points; backs the
// paper's "increasing for x >= r" arguments.
double min_derivative_on(const RealPoly& p, double lo) {
  RealPoly d = p.derivative();
  double m = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 100; ++t) m = std::min(m, eval_ld(d, lo + 10.0 * t / 99));
  return m;
}

// ABS matrix of h1_bip(n) straight from its degree plan, valid past the
// graph order cap: hub degree n-2, cycle degrees 2, pendant degrees 1.
SymMatrix h1_abs_direct(int n) {
  SymMatrix m(n);
  double hub_cycle = std::sqrt(1.0 - 2.0 / n);
  double cycle_cycle = std::sqrt(0.5);
  double hub_pendant = std::sqrt(1.0 - 2.0 / (n - 1));
  m.set(0, 1, hub_cycle);
  m.set(1, 2, cycle_cycle);
  m.set(2, 3, cycle_cycle);
  m.set(3, 0, hub_cycle);
  for (int j = 4; j < n; ++j) m.set(0, j, hub_pendant);
  return m;
}

// Past the order cap, eta1 of G1/G2 comes from the verified factorization:
// the paper polynomial carries the largest root of the full spectrum.
double eta1_g1_any(int n) {
  if (n <= kMaxOrder) return eta1_of(g1(n));
  return largest_real_root(paper_poly(PaperPoly::phi_g1, n), n + 1.0);
}

double eta1_g2_any(int n) {
  if (n <= kMaxOrder) return eta1_of(g2(n));
  return largest_real_root(paper_poly(PaperPoly::psi_g2, n), n + 1.0);
}

bool is_connected_graph(const Graph& g) { return structural_profile(g).connected; }

bool has_bridge(const Graph& g) {
  const auto& edges = g.edges();
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<VertexPair> rest;
    rest.reserve(edges.size() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (i != skip) rest.push_back(edges[i]);
    if (!is_connected_graph(Graph(g.order(), rest))) return true;
  }
  return false;
}

// In a rank-2 core the two base cycles are edge-disjoint (infinity type,
// shared vertex or bridge path) or share a path (theta type). A degree-4
// vertex or a bridge identifies the first kind.
bool core_is_infinity_type(const Graph& core) {
  for (int v = 0; v < core.order(); ++v)
    if (core.degree(v) >= 4) return true;
  return has_bridge(core);
}

struct ReportBuilder {
  CheckReport r;

  explicit ReportBuilder(std::string id, int n) {
    r.check_id = std::move(id);
    r.n = n;
  }
  void margin(const std::string& name, double v) { r.margins.emplace_back(name, v); }
  void witness(const Graph& g, double value) {
    r.witnesses.push_back({graph6_encode(g), value});
  }
  void upgrade(CheckStatus s) {
    if (s == CheckStatus::fail) {
      r.status = CheckStatus::fail;
    } else if (s == CheckStatus::finding && r.status == CheckStatus::pass) {
      r.status = CheckStatus::finding;
    }
  }
  // Strict ">" claims evaluated in floating point: wrong sign within eps is
  // a finding, beyond eps a fail.
  void require_positive(double value, double eps) {
    if (value > 0) return;
    upgrade(-value <= eps ? CheckStatus::finding : CheckStatus::fail);
  }
  void require_exact_sign(int sign, int wanted) {
    if (sign != wanted) upgrade(CheckStatus::fail);
  }
};

// ---------------------------------------------------------------------------
// check bodies

CheckReport check_unb_bound(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_UNB_BOUND", n);
  double bound = (n - 2) / std::sqrt(static_cast<double>(n));
  std::string h1_code = canonical_code(h1_bip(n));
  long long count = 0;
  double best = -1.0;
  std::unique_ptr<Graph> argmax;
  for_each_in_class({n, 1, true, {}, {}, {}}, [&](const Graph& g) {
    if (canonical_code(g) == h1_code) return;
    ++count;
    double v = eta1_of(g);
    if (v > best) {
      best = v;
      argmax = std::make_unique<Graph>(g);
    }
  });
  b.margin("bound", bound);
  b.margin("max_eta1", best);
  b.margin("min_margin", bound - best);
  b.margin("graphs_checked", static_cast<double>(count));
  if (argmax) b.witness(*argmax, best);
  b.require_positive(bound - best, 1e-9);
  return b.r;
}

CheckReport check_zeta_sign(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_ZETA_SIGN", n);
  // zeta(sqrt(n-2)) is an integer: (n-2)^3 - n(n-2)^2 + (3n-13)(n-2) + 5 - n.
  long long m = n - 2;
  long long value = m * m * m - n * m * m + (3LL * n - 13) * m + 5 - n;
  double min_deriv = min_derivative_on(paper_poly(PaperPoly::zeta, n),
                                       std::sqrt(static_cast<double>(n - 2)));
  b.margin("zeta_at_sqrt_n_minus_2", static_cast<double>(value));
  b.margin("min_derivative", min_deriv);
  b.require_exact_sign(value > 0 ? 1 : value < 0 ? -1 : 0, 1);
  b.require_positive(min_deriv, kSignSlack);
  return b.r;
}

CheckReport check_h1_closed(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_H1_CLOSED", n);
  double closed = eta1_sq_h1_closed_form(n);
  SymMatrix m = n <= kMaxOrder ? abs_matrix(h1_bip(n)) : h1_abs_direct(n);
  double eta1 = spectral_radius(m);
  double err = std::abs(closed - eta1 * eta1);
  b.margin("closed_form", closed);
  b.margin("eta1_sq", eta1 * eta1);
  b.margin("abs_err", err);
  if (n <= kMaxOrder) b.witness(h1_bip(n), eta1);
  if (err > 1e-9) b.upgrade(CheckStatus::fail);
  return b.r;
}

CheckReport check_h1_beats_bound(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_H1_BEATS_BOUND", n);
  long long a = h1_radicand(n);
  long long nn = n;
  // eta1^2 > (n-2)^2/n  <=>  sqrt(A) > 2(n-1)(n-2)^2 - (n^3-4n^2+5n+4).
  long long num = ((nn - 4) * nn + 5) * nn + 4;
  long long rhs = 2 * (nn - 1) * (nn - 2) * (nn - 2) - num;
  b.require_exact_sign(sign_exact(-rhs, 1, a), 1);

  __int128 lhs_id = static_cast<__int128>(a) -
                    static_cast<__int128>((nn - 4) * (nn - 4)) *
                        (((nn - 2) * nn + 3) * ((nn - 2) * nn + 3));
  __int128 rhs_id = static_cast<__int128>(16) * (nn - 1) * (nn - 1) * (3 * nn - 8);
  if (lhs_id != rhs_id) b.upgrade(CheckStatus::fail);

  double eta1 = std::sqrt(eta1_sq_h1_closed_form(n));
  double bound = (n - 2) / std::sqrt(static_cast<double>(n));
  b.margin("eta1", eta1);
  b.margin("bound", bound);
  b.margin("margin", eta1 - bound);
  b.margin("identity_residual", static_cast<double>(static_cast<long long>(lhs_id - rhs_id)));
  return b.r;
}

CheckReport check_bip_max(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_BIP_MAX", n);
  auto results = top_k({n, 1, true, {}, {}, {}}, 2);
  for (const auto& r : results) b.r.witnesses.push_back({r.graph6, r.value});
  b.margin("value_1", results[0].value);
  b.margin("margin_to_next", results[0].margin_to_next);
  if (!is_isomorphic(graph6_decode(results[0].graph6), h1_bip(n)))
    b.upgrade(CheckStatus::fail);
  // a singleton class (n = 5) has no rival, so no margin to demand
  if (results.size() > 1 && results[0].margin_to_next <= kUniqTol)
    b.upgrade(CheckStatus::finding);
  return b.r;
}

CheckReport check_kelmans(int n, const VerifyOptions& opt) {
  ReportBuilder b("CHK_KELMANS", n);
  // 1000 instances spread over the active range; this job owns its n-slice.
  int lo = 4, hi = 12;
  int span = hi - lo + 1;
  int instances = 1000 / span + (n - lo < 1000 % span ? 1 : 0);
  std::mt19937_64 rng(opt.seed * 1009 + static_cast<std::uint64_t>(n));
  double min_margin = std::numeric_limits<double>::infinity();
  int nonstrict = 0;
  std::unique_ptr<Graph> worst;
  double worst_eta = 0.0;
  for (int i = 0; i < instances; ++i) {
    int guard = 0;
    while (true) {
      if (++guard > 100000) {
        b.upgrade(CheckStatus::finding);
        b.margin("instance_generation_stalled", 1.0);
        return b.r;
      }
      Graph g = random_connected_graph(rng, n, static_cast<int>(rng() % 4));
      std::vector<VertexPair> valid;
      for (auto [u, v] : g.edges()) {
        auto p = kelmans_partition(g, u, v);
        if (p.omega3 == 0 && p.omega1 != 0 && p.omega2 != 0) {
          valid.emplace_back(u, v);
          valid.emplace_back(v, u);
        }
      }
      if (valid.empty()) continue;
      auto [u, v] = valid[rng() % valid.size()];
      double before = eta1_of(g);
      double after = eta1_of(kelmans(g, u, v));
      double margin = after - before;
      if (margin < min_margin) {
        min_margin = margin;
        worst = std::make_unique<Graph>(g);
        worst_eta = before;
      }
      if (margin <= kStrictTol) ++nonstrict;
      break;
    }
  }
  b.margin("instances", instances);
  b.margin("min_margin", min_margin);
  b.margin("nonstrict_count", nonstrict);
  if (worst) b.witness(*worst, worst_eta);
  if (nonstrict > 0) b.upgrade(CheckStatus::finding);
  return b.r;
}

CheckReport check_struct(int n, bool infinity_type) {
  ReportBuilder b(infinity_type ? "CHK_STRUCT_INF" : "CHK_STRUCT_THETA", n);
  long long count = 0;
  double best = -1.0, second = -1.0;
  std::unique_ptr<Graph> argmax;
  for_each_in_class({n, 2, {}, {}, {}, {}}, [&](const Graph& g) {
    if (core_is_infinity_type(core_subgraph(g)) != infinity_type) return;
    ++count;
    double v = eta1_of(g);
    if (v > best) {
      second = best;
      best = v;
      argmax = std::make_unique<Graph>(g);
    } else if (v > second) {
      second = v;
    }
  });
  b.margin("subclass_size", static_cast<double>(count));
  b.margin("max_eta1", best);
  b.margin("margin_to_next", second >= 0 ? best - second : best);
  bool member = infinity_type ? in_gamma_infinity(*argmax) : in_gamma_theta(*argmax);
  b.margin("maximizer_in_gamma", member ? 1.0 : 0.0);
  b.witness(*argmax, best);
  if (!member) b.upgrade(CheckStatus::fail);
  if (second >= 0 && best - second <= kUniqTol) b.upgrade(CheckStatus::finding);
  return b.r;
}

CheckReport check_charpoly(int n, PaperPoly which) {
  std::string id = std::string("CHK_CHARPOLY_") +
                   (which == PaperPoly::zeta        ? "H2"
                    : which == PaperPoly::phi_pstar ? "PSTAR"
                    : which == PaperPoly::rho_pss   ? "PSS"
                    : which == PaperPoly::psi_g2    ? "G2"
                                                    : "G1");
  ReportBuilder b(id, n);
  Graph g = charpoly_claim_graph(which, n);
  SymMatrix m = charpoly_claim_uses_abs(which) ? abs_matrix(g) : adjacency_matrix(g);
  double worst = 0.0;
  bool ok = spectrum_matches_factorization(m, charpoly_claim_factors(which, n), 1e-8, &worst);
  b.margin("max_abs_diff", worst);
  b.witness(g, spectral_radius(m));
  if (!ok) b.upgrade(CheckStatus::fail);
  return b.r;
}

CheckReport check_d4_bound(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_D4_BOUND", n);
  // phi(sqrt(n-1)) = (2n-16) - 4 sqrt(n-1), exact.
  int sign = sign_exact(2LL * n - 16, -4, n - 1);
  double value = (2.0 * n - 16) - 4.0 * std::sqrt(n - 1.0);
  double min_deriv = min_derivative_on(paper_poly(PaperPoly::phi_pstar, n),
                                       std::sqrt(n - 1.0));
  b.margin("phi_at_sqrt_n_minus_1", value);
  b.margin("min_derivative", min_deriv);
  // The eta1 clause quantifies over diameter-4 Gamma members at n >= 16,
  // which is beyond the enumeration cap: recorded as vacuously checked.
  b.margin("gamma_members_checked", 0.0);
  b.require_exact_sign(sign, 1);
  b.require_positive(min_deriv, kSignSlack);
  return b.r;
}

CheckReport check_d3_bounds(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_D3_BOUNDS", n);
  // 10^4 * rho((1/10) sqrt(100n-53)) = INT - 4000 sqrt(100n-53), exact.
  long long t = 100LL * n - 53;
  long long scaled = t * t - 100LL * (n + 1) * t + 30000LL * n - 130000;
  b.margin("rho_at_tenth_sqrt",
           (static_cast<double>(scaled) - 4000.0 * std::sqrt(static_cast<double>(t))) / 1e4);
  b.require_exact_sign(sign_exact(scaled, -4000, t), 1);
  double min_d1 = min_derivative_on(paper_poly(PaperPoly::rho_pss, n),
                                    std::sqrt(static_cast<double>(t)) / 10.0);
  b.margin("min_derivative_tenth", min_d1);
  b.require_positive(min_d1, kSignSlack);
  if (n >= 34) {
    // rho(sqrt(n-1)) = (n-11) - 4 sqrt(n-1), exact.
    b.margin("rho_at_sqrt_n_minus_1", (n - 11.0) - 4.0 * std::sqrt(n - 1.0));
    b.require_exact_sign(sign_exact(n - 11LL, -4, n - 1), 1);
    double min_d2 = min_derivative_on(paper_poly(PaperPoly::rho_pss, n),
                                      std::sqrt(n - 1.0));
    b.margin("min_derivative_sqrt", min_d2);
    b.require_positive(min_d2, kSignSlack);
  }
  b.margin("gamma_members_checked", 0.0);
  return b.r;
}

CheckReport check_g2_sandwich(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_G2_SANDWICH", n);
  RealPoly psi = paper_poly(PaperPoly::psi_g2, n);
  double lower1 = 0.1 * std::sqrt((n - 1.0) * (100.0 * n - 53) / (n + 1.0));
  double upper1 = lower1 + 1.0 / (2.0 * n);
  double lower2 = (n - 1.0) / std::sqrt(n + 1.0);
  double upper2 = lower2 + 3.0 / (2.0 * n);
  double eta1 = eta1_g2_any(n);
  b.margin("eta1", eta1);
  if (n <= 41) {
    b.margin("psi_at_lower1", eval_ld(psi, lower1));
    b.margin("eta1_minus_lower1", eta1 - lower1);
    b.require_positive(-eval_ld(psi, lower1), kSignSlack);
    b.require_positive(eta1 - lower1, 1e-9);
  }
  if (n >= 22) {
    b.margin("psi_at_upper1", eval_ld(psi, upper1));
    b.margin("upper1_minus_eta1", upper1 - eta1);
    b.margin("min_derivative_upper1", min_derivative_on(psi, upper1));
    b.require_positive(eval_ld(psi, upper1), kSignSlack);
    b.require_positive(upper1 - eta1, 1e-9);
    b.require_positive(min_derivative_on(psi, upper1), kSignSlack);
  }
  b.margin("psi_at_lower2", eval_ld(psi, lower2));
  b.margin("eta1_minus_lower2", eta1 - lower2);
  b.require_positive(-eval_ld(psi, lower2), kSignSlack);
  b.require_positive(eta1 - lower2, 1e-9);
  if (n >= 34) {
    b.margin("psi_at_upper2", eval_ld(psi, upper2));
    b.margin("upper2_minus_eta1", upper2 - eta1);
    b.margin("min_derivative_upper2", min_derivative_on(psi, upper2));
    b.require_positive(eval_ld(psi, upper2), kSignSlack);
    b.require_positive(upper2 - eta1, 1e-9);
    b.require_positive(min_derivative_on(psi, upper2), kSignSlack);
  }
  b.margin("psi_at_sqrt_n", eval_ld(psi, std::sqrt(static_cast<double>(n))));
  b.require_positive(eval_ld(psi, std::sqrt(static_cast<double>(n))), kSignSlack);
  if (n <= kMaxOrder) b.witness(g2(n), eta1);
  return b.r;
}

CheckReport check_g1_lower(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_G1_LOWER", n);
  RealPoly quartic = paper_poly(PaperPoly::phi_g1, n);
  double bound1 = 0.1 * std::sqrt((n - 1.0) * (100.0 * n - 53) / (n + 1.0)) + 1.0 / (2.0 * n);
  double bound2 = (n - 1.0) / std::sqrt(n + 1.0) + 3.0 / (2.0 * n);
  double eta1 = eta1_g1_any(n);
  b.margin("eta1", eta1);
  if (n <= 33) {
    b.margin("quartic_at_bound1", eval_ld(quartic, bound1));
    b.margin("eta1_minus_bound1", eta1 - bound1);
    b.require_positive(-eval_ld(quartic, bound1), kSignSlack);
    b.require_positive(eta1 - bound1, 1e-9);
  }
  b.margin("quartic_at_bound2", eval_ld(quartic, bound2));
  b.margin("eta1_minus_bound2", eta1 - bound2);
  b.require_positive(-eval_ld(quartic, bound2), kSignSlack);
  b.require_positive(eta1 - bound2, 1e-9);
  if (n <= kMaxOrder) b.witness(g1(n), eta1);
  return b.r;
}

CheckReport check_top2_bicyclic(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_TOP2_BICYCLIC", n);
  auto results = top_k({n, 2, {}, {}, {}, {}}, 2);
  for (const auto& r : results) b.r.witnesses.push_back({r.graph6, r.value});
  b.margin("value_1", results[0].value);
  b.margin("value_2", results[1].value);
  b.margin("margin_12", results[0].margin_to_next);
  b.margin("margin_2_next", results[1].margin_to_next);
  if (!is_isomorphic(graph6_decode(results[0].graph6), g1(n)))
    b.upgrade(CheckStatus::fail);
  if (n >= 7) {
    if (!is_isomorphic(graph6_decode(results[1].graph6), g2(n)))
      b.upgrade(CheckStatus::fail);
  } else {
    // printed reference values are truncated to four decimals, not rounded,
    // so accept the whole truncation window [printed, printed + 1e-4)
    double v1 = n == 5 ? 2.1637 : 2.3220;
    double v2 = n == 5 ? 2.1023 : 2.2915;
    auto matches_printed = [](double v, double printed) {
      return v - printed > -1e-9 && v - printed < 1e-4;
    };
    if (!matches_printed(results[0].value, v1)) b.upgrade(CheckStatus::fail);
    if (!matches_printed(results[1].value, v2)) b.upgrade(CheckStatus::fail);
  }
  if (results[0].margin_to_next <= kUniqTol || results[1].margin_to_next <= kUniqTol)
    b.upgrade(CheckStatus::finding);
  return b.r;
}

CheckReport check_adj_imports(int n, const VerifyOptions&) {
  ReportBuilder b("CHK_ADJ_IMPORTS", n);

  // girth41: lambda1 maximizer over bipartite unicyclic minus H1 is H2.
  std::string h1_code = canonical_code(h1_bip(n));
  double best = -1.0, second = -1.0;
  std::unique_ptr<Graph> argmax;
  for_each_in_class({n, 1, true, {}, {}, {}}, [&](const Graph& g) {
    if (canonical_code(g) == h1_code) return;
    double v = lambda1_of(g);
    if (v > best) {
      second = best;
      best = v;
      argmax = std::make_unique<Graph>(g);
    } else if (v > second) {
      second = v;
    }
  });
  b.margin("unb_max_lambda1", best);
  b.margin("unb_margin_to_next", second >= 0 ? best - second : best);
  b.witness(*argmax, best);
  if (!is_isomorphic(*argmax, h2_bip(n))) b.upgrade(CheckStatus::fail);
  if (second >= 0 && best - second <= kUniqTol) b.upgrade(CheckStatus::finding);

  // d3d4: lambda1 maximizer over bicyclic graphs of diameter d.
  for (int d = 3; d + 4 <= n; ++d) {
    double dbest = -1.0, dsecond = -1.0;
    std::unique_ptr<Graph> dargmax;
    for_each_in_class({n, 2, {}, {}, {}, {}}, [&](const Graph& g) {
      if (structural_profile(g).diameter != d) return;
      double v = lambda1_of(g);
      if (v > dbest) {
        dsecond = dbest;
        dbest = v;
        dargmax = std::make_unique<Graph>(g);
      } else if (v > dsecond) {
        dsecond = v;
      }
    });
    Graph named = d == 3 ? p_double_star(n, 3, 3) : p_star(n, d, (d + 2) / 2);
    std::string key = "d" + std::to_string(d);
    b.margin(key + "_max_lambda1", dbest);
    b.margin(key + "_margin_to_next", dsecond >= 0 ? dbest - dsecond : dbest);
    if (dargmax) b.witness(*dargmax, dbest);
    if (!dargmax || !is_isomorphic(*dargmax, named)) b.upgrade(CheckStatus::fail);
    if (dsecond >= 0 && dbest - dsecond <= kUniqTol) b.upgrade(CheckStatus::finding);
  }
  return b.r;
}

// ---------------------------------------------------------------------------
// registry and runners

struct CheckDef {
  CheckInfo info;
  std::function<CheckReport(int, const VerifyOptions&)> fn;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto add = [&](std::string id, std::string desc, int lo, int hi, bool quick,
                   std::function<CheckReport(int, const VerifyOptions&)> fn) {
      v.push_back({{std::move(id), std::move(desc), lo, hi, quick}, std::move(fn)});
    };
    add("CHK_UNB_BOUND", "eta1 < (n-2)/sqrt(n) over bipartite unicyclic minus H1",
        10, 11, false, check_unb_bound);
    add("CHK_ZETA_SIGN", "zeta(sqrt(n-2)) > 0 exactly, zeta increasing beyond it",
        10, 500, true, check_zeta_sign);
    add("CHK_H1_CLOSED", "closed-form eta1^2(H1) matches eigensolver to 1e-9",
        5, 200, true, check_h1_closed);
    add("CHK_H1_BEATS_BOUND", "eta1(H1) > (n-2)/sqrt(n) plus exact radicand identity",
        5, 500, true, check_h1_beats_bound);
    add("CHK_BIP_MAX", "H1 uniquely maximizes eta1 over bipartite unicyclic",
        5, 9, false, check_bip_max);
    add("CHK_KELMANS", "Kelmans operation strictly raises eta1 on valid instances",
        4, 12, false, check_kelmans);
    add("CHK_STRUCT_INF", "infinity-core maximizer lies in Gamma-infinity",
        6, 9, false, [](int n, const VerifyOptions&) { return check_struct(n, true); });
    add("CHK_STRUCT_THETA", "theta-core maximizer lies in Gamma-theta",
        6, 9, false, [](int n, const VerifyOptions&) { return check_struct(n, false); });
    add("CHK_CHARPOLY_H2", "A(H2) spectrum matches x^(n-6) zeta",
        7, 30, true, [](int n, const VerifyOptions&) { return check_charpoly(n, PaperPoly::zeta); });
    add("CHK_CHARPOLY_PSTAR", "A(P*5(3)) spectrum matches x^(n-6)(x^2-1) phi",
        7, 30, true, [](int n, const VerifyOptions&) { return check_charpoly(n, PaperPoly::phi_pstar); });
    add("CHK_CHARPOLY_PSS", "A(P**4(3)) spectrum matches x^(n-4) rho",
        7, 30, true, [](int n, const VerifyOptions&) { return check_charpoly(n, PaperPoly::rho_pss); });
    add("CHK_CHARPOLY_G2", "ABS(G2) spectrum matches the psi factorization",
        7, 30, true, [](int n, const VerifyOptions&) { return check_charpoly(n, PaperPoly::psi_g2); });
    add("CHK_CHARPOLY_G1", "ABS(G1) spectrum matches x^(n-4) times the quartic",
        7, 30, true, [](int n, const VerifyOptions&) { return check_charpoly(n, PaperPoly::phi_g1); });
    add("CHK_D4_BOUND", "phi(sqrt(n-1)) > 0 exactly; d4 Gamma members beyond cap",
        16, 500, true, check_d4_bound);
    add("CHK_D3_BOUNDS", "rho sign conditions exactly; d3 Gamma members beyond cap",
        21, 500, true, check_d3_bounds);
    add("CHK_G2_SANDWICH", "psi signs and eta1(G2) inside the printed bounds",
        5, 500, true, check_g2_sandwich);
    add("CHK_G1_LOWER", "quartic signs and eta1(G1) above the printed bounds",
        5, 500, true, check_g1_lower);
    add("CHK_TOP2_BICYCLIC", "top-2 bicyclic are G1, G2 (n >= 7); paper values at 5, 6",
        5, 9, false, check_top2_bicyclic);
    add("CHK_ADJ_IMPORTS", "imported adjacency maximizer lemmas girth41 and d3d4",
        6, 9, false, check_adj_imports);
    return v;
  }();
  return defs;
}

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  int budget = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("ABS_SPECTRA_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) budget = std::min(budget, cap);
  }
  return budget;
}

struct Job {
  const CheckDef* def;
  int n;
};

std::vector<CheckReport> run_jobs(const std::vector<Job>& jobs,
                                  const VerifyOptions& options) {
  std::vector<CheckReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      auto start = std::chrono::steady_clock::now();
      CheckReport r;
      try {
        r = jobs[i].def->fn(jobs[i].n, options);
      } catch (const std::exception&) {
        r.check_id = jobs[i].def->info.id;
        r.n = jobs[i].n;
        r.status = CheckStatus::fail;
        r.margins.emplace_back("exception", 1.0);
      }
      auto stop = std::chrono::steady_clock::now();
      r.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
      out[i] = std::move(r);
    }
  };
  int threads = std::min<int>(thread_budget(), static_cast<int>(jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::vector<Job> jobs_for(const CheckDef& def, const VerifyOptions& options) {
  int lo = options.n_lo > 0 ? std::max(options.n_lo, def.info.default_lo)
                            : def.info.default_lo;
  int hi = options.n_hi > 0 ? std::min(options.n_hi, def.info.default_hi)
                            : def.info.default_hi;
  if (lo > hi)
    raise(errc::bad_params, "empty n range for " + def.info.id + " (valid " +
                                std::to_string(def.info.default_lo) + ".." +
                                std::to_string(def.info.default_hi) + ")");
  std::vector<Job> jobs;
  for (int n = lo; n <= hi; ++n) jobs.push_back({&def, n});
  return jobs;
}

}  // namespace

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::finding: return "finding";
  }
  return "?";
}

bool CheckReport::operator==(const CheckReport& o) const {
  return check_id == o.check_id && n == o.n && status == o.status &&
         margins == o.margins && runtime_ms == o.runtime_ms &&
         witnesses.size() == o.witnesses.size() &&
         std::equal(witnesses.begin(), witnesses.end(), o.witnesses.begin(),
                    [](const Witness& a, const Witness& b) {
                      return a.g6 == b.g6 && a.value == b.value;
                    });
}

std::vector<ExtremalResult> top_k(const ClassSpec& spec, int k) {
  if (k < 1) raise(errc::bad_params, "k must be positive");
  struct Entry {
    double value;
    Graph g;
  };
  std::vector<Entry> best;
  for_each_in_class(spec, [&](const Graph& g) {
    double v = eta1_of(g);
    auto it = std::find_if(best.begin(), best.end(),
                           [&](const Entry& e) { return e.value < v; });
    best.insert(it, {v, g});
    if (static_cast<int>(best.size()) > k + 1) best.pop_back();
  });
  std::vector<ExtremalResult> out;
  for (int r = 0; r < k && r < static_cast<int>(best.size()); ++r) {
    ExtremalResult res;
    res.rank = r + 1;
    res.graph6 = graph6_encode(best[r].g);
    res.value = best[r].value;
    res.margin_to_next = r + 1 < static_cast<int>(best.size())
                             ? best[r].value - best[r + 1].value
                             : 0.0;
    out.push_back(std::move(res));
  }
  return out;
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& def : registry()) v.push_back(def.info);
    return v;
  }();
  return infos;
}

std::vector<CheckReport> run_check(const std::string& check_id,
                                   const VerifyOptions& options) {
  for (const auto& def : registry()) {
    if (def.info.id == check_id) return run_jobs(jobs_for(def, options), options);
  }
  raise(errc::unknown_check, check_id);
}

std::vector<CheckReport> run_all(Profile profile, const VerifyOptions& options) {
  std::vector<Job> jobs;
  for (const auto& def : registry()) {
    if (profile == Profile::quick && !def.info.quick) continue;
    auto batch = jobs_for(def, options);
    jobs.insert(jobs.end(), batch.begin(), batch.end());
  }
  return run_jobs(jobs, options);
}

std::string to_jsonl(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    json j;
    j["check_id"] = r.check_id;
    j["n"] = r.n;
    j["status"] = to_string(r.status);
    json wits = json::array();
    for (const auto& w : r.witnesses) {
      json jw;
      jw["g6"] = w.g6;
      jw["value"] = w.value;
      wits.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(wits);
    json margins = json::object();
    for (const auto& [name, value] : r.margins) margins[name] = value;
    j["margins"] = std::move(margins);
    j["runtime_ms"] = r.runtime_ms;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<CheckReport> from_jsonl(const std::string& text) {
  std::vector<CheckReport> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.n = j.at("n").get<int>();
    std::string status = j.at("status").get<std::string>();
    r.status = status == "pass"   ? CheckStatus::pass
               : status == "fail" ? CheckStatus::fail
                                  : CheckStatus::finding;
    for (const auto& jw : j.at("witnesses"))
      r.witnesses.push_back({jw.at("g6").get<std::string>(), jw.at("value").get<double>()});
    for (const auto& [name, value] : j.at("margins").items())
      r.margins.emplace_back(name, value.get<double>());
    r.runtime_ms = j.at("runtime_ms").get<long long>();
    out.push_back(std::move(r));
  }
  return out;
}

void print_summary(std::ostream& os, const std::vector<CheckReport>& reports) {
  os << std::left << std::setw(22) << "check" << std::setw(12) << "n-range"
     << std::setw(6) << "pass" << std::setw(6) << "fail" << std::setw(9)
     << "finding" << "evidence\n";
  long long pass_total = 0, fail_total = 0, finding_total = 0;
  for (const auto& info : check_catalog()) {
    int lo = 0, hi = 0;
    long long pass = 0, fail = 0, finding = 0;
    for (const auto& r : reports) {
      if (r.check_id != info.id) continue;
      if (lo == 0 || r.n < lo) lo = r.n;
      hi = std::max(hi, r.n);
      (r.status == CheckStatus::pass   ? pass
       : r.status == CheckStatus::fail ? fail
                                       : finding)++;
    }
    if (lo == 0) continue;
    pass_total += pass;
    fail_total += fail;
    finding_total += finding;
    const char* evidence = info.id == "CHK_KELMANS"
                               ? "seeded sampling, not a proof"
                               : "finite-range evidence, not a proof";
    os << std::setw(22) << info.id
       << std::setw(12) << (std::to_string(lo) + ".." + std::to_string(hi))
       << std::setw(6) << pass << std::setw(6) << fail << std::setw(9) << finding
       << evidence << "\n";
  }
  os << "total: " << pass_total + fail_total + finding_total << " reports, "
     << pass_total << " pass, " << fail_total << " fail, " << finding_total
     << " finding\n";
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges) {
  if (n < 1 || n > kMaxOrder) raise(errc::bad_params, "bad random graph order");
  std::vector<VertexPair> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng() % v), v);
  Graph tree(n, edges);
  long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
  int want = static_cast<int>(std::min<long long>(extra_edges, max_extra));
  std::vector<VertexPair> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.has_edge(u, v)) pool.emplace_back(u, v);
  for (int i = 0; i < want; ++i) {
    std::size_t pick = rng() % pool.size();
    edges.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<long>(pick));
  }
  return Graph(n, edges);
}

}  // namespace absspec
