#pragma once

#include <string_view>

#include "absspec/graph.hpp"
#include "absspec/poly.hpp"
#include "absspec/spectral.hpp"

namespace absspec {

// Named graphs. Layouts are fixed (and load-bearing for the printed
// characteristic polynomials): constructors document their vertex plans.
// Orders above kMaxOrder surface as the graph constructor's out_of_range.

// C4 = 0-1-2-3-0 with pendants 4..n-1 on vertex 0. n >= 5.
Graph h1_bip(int n);

// C4 = 0-1-2-3-0, pendants 5..n-1 on vertex 0, one pendant 4 on vertex 3
// (a neighbor of vertex 0, not the antipode). n >= 6.
Graph h2_bip(int n);

// Two cycles C_p and C_q joined through a path on l vertices whose ends lie
// on the cycles; l = 1 means the cycles share a vertex. p, q >= 3, l >= 1.
// Order p + q + l - 2.
Graph b_infinity(int p, int l, int q);

// Two hub vertices joined by three internally disjoint paths with p, l, q
// interior vertices. At most one of p, l, q may be 0 (a hub-hub edge).
// Order p + l + q + 2.
Graph b_theta(int p, int l, int q);

// Path 0-1-..-d plus pendants d+1..n-1 on vertex i-1 (1-based position i,
// 2 <= i <= d). p_star adds edges (i-2, n-1) and (i, n-1); p_double_star
// adds (i-2, n-2) and (i-2, n-1).
Graph p_path(int n, int d, int i);
Graph p_star(int n, int d, int i);
Graph p_double_star(int n, int d, int i);

// K4 minus one edge: hub 0 adjacent to 1, 2, 3; edges 1-2 and 2-3; pendants
// 4..n-1 on the hub. n >= 5.
Graph g1(int n);

// Two triangles 0-1-2 and 0-3-4 sharing hub 0, pendants 5..n-1 on the hub.
// n >= 5.
Graph g2(int n);

// Membership predicates for the extremal classes: girth 3, diameter <= 4,
// exactly n-5 (resp. n-4) pendants, 2-core isomorphic to b_infinity(3,1,3)
// (resp. b_theta(1,1,0)). Input must be connected with cycle rank 2.
bool in_gamma_infinity(const Graph& g);
bool in_gamma_theta(const Graph& g);

// (n^3 - 4n^2 + 5n + 4 + sqrt(A)) / (2n(n-1)) with the radicand
// A = n^6 - 12n^5 + 58n^4 - 108n^3 + 41n^2 + 40n + 16 evaluated in integer
// arithmetic first; perfect squares (n = 5) come out exact. n >= 5.
double eta1_sq_h1_closed_form(int n);
long long h1_radicand(int n);

enum class PaperPoly { zeta, phi_pstar, rho_pss, psi_g2, phi_g1 };

RealPoly paper_poly(PaperPoly name, int n);
PaperPoly paper_poly_from_token(std::string_view token);
const char* paper_poly_token(PaperPoly name);

// Each named polynomial factors the characteristic polynomial of one
// family member's matrix. These return the member, which matrix kind the
// claim is about, the complete factor list, and the smallest valid order.
Graph charpoly_claim_graph(PaperPoly name, int n);
bool charpoly_claim_uses_abs(PaperPoly name);
std::vector<FactorTerm> charpoly_claim_factors(PaperPoly name, int n);
int charpoly_claim_min_n(PaperPoly name);

// CLI token surface: "h1:8", "g2:12", "binf:3,1,3", "btheta:1,1,0",
// "pstar:n=10,d=4,i=3" (also ppath:/pss:).
Graph family_from_token(std::string_view token);

}  // namespace absspec
