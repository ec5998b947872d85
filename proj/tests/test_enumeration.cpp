#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "absspec/canonical.hpp"
#include "absspec/enumeration.hpp"
#include "absspec/error.hpp"
#include "absspec/families.hpp"
#include "absspec/graph.hpp"
#include "absspec/graph6.hpp"
#include "absspec/transforms.hpp"
#include "oracles.hpp"

using absspec::ClassSpec;
using absspec::Graph;

TEST_CASE("tree counts match the known sequence") {
  const long long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    auto trees = absspec::enumerate_trees(n);
    CHECK(static_cast<long long>(trees.size()) == expected[n - 1]);
    std::set<std::string> codes;
    for (const auto& t : trees) {
      CHECK(t.order() == n);
      CHECK(t.edge_count() == n - 1);
      codes.insert(absspec::canonical_code(t));
    }
    CHECK(codes.size() == trees.size());
  }
  CHECK_THROWS_AS(absspec::enumerate_trees(13), absspec::Error);
  CHECK_THROWS_AS(absspec::enumerate_trees(0), absspec::Error);
}

TEST_CASE("class streams agree with the naive oracle") {
  for (int n = 3; n <= 6; ++n) {
    for (int rank = 1; rank <= 2; ++rank) {
      for (int bip = 0; bip <= 1; ++bip) {
        ClassSpec spec{n, rank, {}, {}, {}, {}};
        if (bip) spec.bipartite = true;
        std::set<std::string> got;
        absspec::for_each_in_class(spec, [&](const Graph& g) {
          CHECK(absspec::matches(g, spec));
          got.insert(oracle::brute_canonical_code(g));
        });
        CHECK(got == oracle::naive_class_codes(spec));
      }
    }
  }
}

TEST_CASE("known tiny counts") {
  CHECK(absspec::count_class({3, 1, {}, {}, {}, {}}) == 1);
  CHECK(absspec::count_class({4, 1, {}, {}, {}, {}}) == 2);
  CHECK(absspec::count_class({4, 1, true, {}, {}, {}}) == 1);
  // the only bicyclic graph on 4 vertices is K4 minus an edge
  CHECK(absspec::count_class({4, 2, {}, {}, {}, {}}) == 1);
  CHECK(absspec::count_class({5, 2, {}, {}, {}, {}}) == 5);
  CHECK(absspec::count_class({6, 2, {}, {}, {}, {}}) == 19);
  CHECK(absspec::count_class({5, 1, true, {}, {}, {}}) == 1);
  CHECK(absspec::count_class({6, 1, true, {}, {}, {}}) == 5);

  // memoized second call gives the same answer
  CHECK(absspec::count_class({6, 2, {}, {}, {}, {}}) == 19);

  std::vector<Graph> bip4;
  absspec::for_each_in_class({4, 1, true, {}, {}, {}},
                             [&](const Graph& g) { bip4.push_back(g); });
  REQUIRE(bip4.size() == 1);
  CHECK(absspec::is_isomorphic(bip4[0], Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));

  bool found_h1 = false;
  absspec::for_each_in_class({5, 1, true, {}, {}, {}}, [&](const Graph& g) {
    found_h1 = found_h1 || absspec::is_isomorphic(g, absspec::h1_bip(5));
  });
  CHECK(found_h1);

  std::vector<Graph> bi4;
  absspec::for_each_in_class({4, 2, {}, {}, {}, {}},
                             [&](const Graph& g) { bi4.push_back(g); });
  REQUIRE(bi4.size() == 1);
  CHECK(absspec::is_isomorphic(bi4[0], absspec::b_theta(1, 1, 0)));
}

TEST_CASE("stream determinism and dedup") {
  auto run = [] {
    std::vector<std::string> lines;
    absspec::for_each_in_class({7, 2, {}, {}, {}, {}}, [&](const Graph& g) {
      lines.push_back(absspec::graph6_encode(g));
    });
    return lines;
  };
  auto a = run();
  auto b = run();
  CHECK(a == b);
  std::set<std::string> codes;
  absspec::for_each_in_class({7, 2, {}, {}, {}, {}}, [&](const Graph& g) {
    CHECK(codes.insert(absspec::canonical_code(g)).second);
  });
}

TEST_CASE("filters are honest restrictions") {
  ClassSpec base{7, 1, {}, {}, {}, {}};
  ClassSpec girthy = base;
  girthy.girth_eq = 4;
  std::vector<std::string> direct, filtered;
  absspec::for_each_in_class(girthy, [&](const Graph& g) {
    direct.push_back(absspec::graph6_encode(g));
  });
  absspec::for_each_in_class(base, [&](const Graph& g) {
    if (absspec::structural_profile(g).girth == 4)
      filtered.push_back(absspec::graph6_encode(g));
  });
  CHECK(direct == filtered);

  ClassSpec diam = base;
  diam.diameter_max = 3;
  std::vector<std::string> d1, d2;
  absspec::for_each_in_class(diam, [&](const Graph& g) {
    d1.push_back(absspec::graph6_encode(g));
  });
  absspec::for_each_in_class(base, [&](const Graph& g) {
    if (absspec::structural_profile(g).diameter <= 3)
      d2.push_back(absspec::graph6_encode(g));
  });
  CHECK(d1 == d2);

  ClassSpec pend = base;
  pend.pendant_eq = 3;
  std::vector<std::string> p1, p2;
  absspec::for_each_in_class(pend, [&](const Graph& g) {
    p1.push_back(absspec::graph6_encode(g));
  });
  absspec::for_each_in_class(base, [&](const Graph& g) {
    if (absspec::structural_profile(g).pendant_count == 3)
      p2.push_back(absspec::graph6_encode(g));
  });
  CHECK(p1 == p2);
}

TEST_CASE("caps and bad params") {
  CHECK_THROWS_AS(absspec::count_class({11, 2, {}, {}, {}, {}}), absspec::Error);
  CHECK_THROWS_AS(absspec::count_class({12, 1, {}, {}, {}, {}}), absspec::Error);
  CHECK_THROWS_AS(absspec::count_class({13, 0, {}, {}, {}, {}}), absspec::Error);
  CHECK_THROWS_AS(absspec::count_class({6, 3, {}, {}, {}, {}}), absspec::Error);
  CHECK(absspec::count_class({10, 2, {}, {}, {}, {}}) > 0);
}

TEST_CASE("bipartite flag matches the odd-walk oracle on streams") {
  for (int n = 4; n <= 8; ++n) {
    for (int rank = 1; rank <= 2; ++rank) {
      absspec::for_each_in_class({n, rank, {}, {}, {}, {}}, [&](const Graph& g) {
        auto p = absspec::structural_profile(g);
        CHECK(p.bipartite == oracle::bipartite_by_odd_walks(g));
        // one direction of the parity story is a theorem
        if (p.bipartite) CHECK(p.girth % 2 == 0);
      });
    }
  }
}

TEST_CASE("every bicyclic core is an infinity or theta graph") {
  // checked through n = 8 here; the acceptance suite extends to 9
  std::vector<Graph> cores;
  for (int p = 0; p <= 6; ++p)
    for (int l = 0; l <= 6; ++l)
      for (int q = 0; q <= 6; ++q)
        if ((p == 0) + (l == 0) + (q == 0) <= 1 && p + l + q <= 6)
          cores.push_back(absspec::b_theta(p, l, q));
  for (int p = 3; p <= 6; ++p)
    for (int l = 1; l <= 4; ++l)
      for (int q = 3; q <= p; ++q) cores.push_back(absspec::b_infinity(p, l, q));
  for (int n = 4; n <= 8; ++n) {
    absspec::for_each_in_class({n, 2, {}, {}, {}, {}}, [&](const Graph& g) {
      Graph core = absspec::core_subgraph(g);
      bool matched = false;
      for (const Graph& c : cores)
        if (c.order() == core.order() && absspec::is_isomorphic(core, c)) {
          matched = true;
          break;
        }
      CHECK(matched);
    });
  }
}
