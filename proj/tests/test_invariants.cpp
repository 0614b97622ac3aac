#include "doctest.h"
#include "oracles.hpp"
#include "szw/enumerate.hpp"
#include "szw/families.hpp"
#include "szw/invariants.hpp"
#include "szw/structure.hpp"

using namespace szw;

namespace {
std::int64_t w_of(const Graph& g) { return wiener(all_pairs_distances(g)); }
}  // namespace

TEST_CASE("edge_split") {
  DistanceMatrix c5 = all_pairs_distances(cycle(5));
  EdgeSplit s = edge_split(c5, 0, 1);
  CHECK(s.n_u == 2);
  CHECK(s.n_v == 2);
  CHECK(s.n_0 == 1);

  DistanceMatrix c4 = all_pairs_distances(cycle(4));
  s = edge_split(c4, 1, 2);
  CHECK(s.n_u == 2);
  CHECK(s.n_v == 2);
  CHECK(s.n_0 == 0);

  DistanceMatrix k4 = all_pairs_distances(complete(4));
  s = edge_split(k4, 0, 3);
  CHECK(s.n_u == 1);
  CHECK(s.n_v == 1);
  CHECK(s.n_0 == 2);

  CHECK_THROWS_AS(edge_split(c4, 0, 2), std::invalid_argument);  // non-edge
  CHECK_THROWS_AS(edge_split(c4, 1, 1), std::invalid_argument);
}

TEST_CASE("edge_split counts always sum to n, endpoints count themselves") {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : cached_class(ClassSpec::GraphClass::connected, n)) {
      DistanceMatrix dm = all_pairs_distances(g);
      for (auto [u, v] : g.edges()) {
        EdgeSplit s = edge_split(dm, u, v);
        REQUIRE(s.n_u + s.n_v + s.n_0 == n);
        REQUIRE(s.n_u >= 1);
        REQUIRE(s.n_v >= 1);
      }
    }
  }
}

TEST_CASE("wiener spot values") {
  CHECK(w_of(cr_paths(3, {4, 2, 1})) == 135);  // C_3(P_5,P_3,P_2)
  CHECK(w_of(complete(4)) == 6);
  CHECK(w_of(lollipop(5, 4)) == 16);
}

TEST_CASE("wiener_tree_edge_form") {
  CHECK(wiener_tree_edge_form(path(4)) == 10);
  CHECK(wiener_tree_edge_form(star(5)) == 16);
  CHECK(wiener_tree_edge_form(path(2)) == 1);
  CHECK_THROWS_AS(wiener_tree_edge_form(cycle(5)), std::invalid_argument);

  for (int n = 2; n <= 10; ++n)
    for (const Graph& t : cached_class(ClassSpec::GraphClass::trees, n))
      REQUIRE(wiener_tree_edge_form(t) == wiener(all_pairs_distances(t)));
}

TEST_CASE("szeged spot values and ratios") {
  Graph c5 = cycle(5);
  DistanceMatrix d5 = all_pairs_distances(c5);
  CHECK(szeged(c5, d5) == 20);
  CHECK(sz_over_w(c5, d5) == Rational(4, 3));

  Graph l54 = lollipop(5, 4);
  DistanceMatrix d54 = all_pairs_distances(l54);
  CHECK(szeged(l54, d54) == 28);
  CHECK(sz_over_w(l54, d54) == Rational(7, 4));

  Graph b = b1(5);
  DistanceMatrix db = all_pairs_distances(b);
  CHECK(wiener(db) == 14);
  CHECK(szeged(b, db) == 16);
  CHECK(sz_over_w(b, db) == Rational(8, 7));
}

TEST_CASE("revised szeged") {
  Graph c5 = cycle(5);
  DistanceMatrix d5 = all_pairs_distances(c5);
  CHECK(revised_szeged_x4(c5, d5) == 125);
  CHECK(revised_szeged(c5, d5) == Rational(125, 4));
  CHECK(szstar_over_w(c5, d5) == Rational(25, 12));
  CHECK(szstar_over_w(c5, d5) == Rational(2) + Rational(2, 5 * 5 - 1));

  Graph c4 = cycle(4);
  DistanceMatrix d4 = all_pairs_distances(c4);
  CHECK(revised_szeged(c4, d4) == Rational(16));
  CHECK(szstar_over_w(c4, d4) == Rational(2));

  // bipartite graphs: every edge split has n_0 = 0, hence 4 Sz* = 4 Sz
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : cached_class(ClassSpec::GraphClass::connected, n)) {
      if (!is_bipartite(g)) continue;
      DistanceMatrix dm = all_pairs_distances(g);
      for (auto [u, v] : g.edges()) REQUIRE(edge_split(dm, u, v).n_0 == 0);
      REQUIRE(revised_szeged_x4(g, dm) == 4 * szeged(g, dm));
    }
  }
}

TEST_CASE("difference values") {
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& t : cached_class(ClassSpec::GraphClass::trees, n)) {
      DistanceMatrix dm = all_pairs_distances(t);
      REQUIRE(sz_minus_w(t, dm) == 0);
      if (n >= 2) REQUIRE(sz_over_w(t, dm) == Rational(1));
    }
  }
  for (int n = 5; n <= 10; ++n) {
    Graph b = b1(n);
    DistanceMatrix dm = all_pairs_distances(b);
    CHECK(sz_minus_w(b, dm) == 2);
  }
  // a C_4 with a tree glued at one cycle vertex sits at the bipartite floor
  for (int n = 5; n <= 9; ++n) {
    for (const Graph& t : cached_class(ClassSpec::GraphClass::trees, n - 3)) {
      Graph g = coalesce(cycle(4), 0, t, 0);
      DistanceMatrix dm = all_pairs_distances(g);
      REQUIRE(sz_minus_w(g, dm) == 4 * n - 8);
    }
  }
}

TEST_CASE("Rational behaves exactly") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(3, 2) < Rational(8, 5));
  CHECK(Rational(8, 7).str() == "8/7");
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(2).str_fraction() == "2/1");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 4) - Rational(3, 4) == Rational(1));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 8) == Rational(4));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(INT64_MAX, 1) * Rational(INT64_MAX, 1), std::overflow_error);
  // cross-multiplied comparison stays exact where doubles would tie
  CHECK(Rational(1000000000000000001, 1000000000000000000) > Rational(1));
}

TEST_CASE("szeged matches a per-edge recount over oracle distances") {
  for (const Graph& g : cached_class(ClassSpec::GraphClass::connected, 6)) {
    DistanceMatrix dm = all_pairs_distances(g);
    std::int64_t sz = 0, sz4 = 0;
    for (auto [u, v] : g.edges()) {
      int nu = 0, nv = 0, n0 = 0;
      for (int w = 0; w < g.n(); ++w) {
        int du = dm.at(u, w), dv = dm.at(v, w);
        if (du < dv)
          ++nu;
        else if (dv < du)
          ++nv;
        else
          ++n0;
      }
      sz += static_cast<std::int64_t>(nu) * nv;
      sz4 += static_cast<std::int64_t>(2 * nu + n0) * (2 * nv + n0);
    }
    REQUIRE(szeged(g, dm) == sz);
    REQUIRE(revised_szeged_x4(g, dm) == sz4);
  }
}
