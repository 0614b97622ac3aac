#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "szw/canonical.hpp"
#include "szw/distance.hpp"
#include "szw/enumerate.hpp"
#include "szw/families.hpp"
#include "szw/invariants.hpp"
#include "szw/structure.hpp"

using namespace szw;

namespace {
std::int64_t w_of(const Graph& g) { return wiener(all_pairs_distances(g)); }
std::int64_t sz_of(const Graph& g) { return szeged(g, all_pairs_distances(g)); }
}  // namespace

TEST_CASE("path, cycle, star, complete") {
  CHECK(w_of(path(5)) == 20);
  CHECK(closed_form_w_path(5) == 20);
  CHECK(w_of(cycle(4)) == 8);
  CHECK(closed_form_w_cycle(4) == 8);
  CHECK(closed_form_w_cycle(5) == 15);
  CHECK(w_of(star(5)) == 16);
  CHECK(closed_form_w_star(5) == 16);
  CHECK(closed_form_w_complete(4) == 6);
  for (int n = 2; n <= 12; ++n) {
    CHECK(w_of(path(n)) == closed_form_w_path(n));
    CHECK(w_of(star(n)) == closed_form_w_star(n));
    if (n >= 3) CHECK(w_of(cycle(n)) == closed_form_w_cycle(n));
    CHECK(w_of(complete(n)) == closed_form_w_complete(n));
  }
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("lollipop") {
  CHECK(w_of(lollipop(6, 3)) == 31);
  CHECK(w_of(lollipop(8, 6)) == 64);
  CHECK(w_of(lollipop(8, 8)) == 64);
  CHECK(w_of(cycle(8)) == 64);
  CHECK(canonical_key(lollipop(7, 7)) == canonical_key(cycle(7)));
  CHECK_THROWS_AS(lollipop(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(lollipop(5, 6), std::invalid_argument);
}

TEST_CASE("cycles with rooted trees") {
  // C_3(P_4,P_2,P_1): ties W(L_{7,4}) as the second-largest unicyclic value
  Graph g = cr_paths(3, {3, 1, 0});
  CHECK(g.n() == 7);
  CHECK(w_of(g) == 48);
  CHECK(oracle::wiener(g) == 48);
  CHECK(w_of(lollipop(7, 4)) == 48);

  CHECK(w_of(cr_paths(3, {5, 2, 1})) == 184);  // C_3(P_6,P_3,P_2)
  CHECK(w_of(cr_paths(4, {5, 0, 1, 0})) == 146);  // C_4(P_6,P_1,P_2,P_1) at n=10

  CHECK_THROWS_AS(cr_paths(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_with_rooted_trees(3, {{cycle(3), 0}, {path(1), 0}, {path(1), 0}}),
                  std::invalid_argument);
}

TEST_CASE("spider") {
  RootedTree t = spider(8, {3, 3, 1});
  CHECK(w_of(t.tree) == 75);
  CHECK(t.tree.degree(t.root) == 1);
  CHECK(w_of(spider(5, {2, 1, 1}).tree) == 18);
  CHECK(w_of(spider(8, {4, 2, 1}).tree) == 76);
  // root sits at the tip of the longest leg
  DistanceMatrix dm = all_pairs_distances(spider(9, {5, 2, 1}).tree);
  CHECK(transmission(dm, spider(9, {5, 2, 1}).root) == 34);
  CHECK(spider_center_rooted(9, {5, 2, 1}).root == 0);
  CHECK_THROWS_AS(spider(8, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(spider(8, {3, 3, 0, 1}), std::invalid_argument);
}

TEST_CASE("h graphs") {
  for (int n = 8; n <= 14; ++n) {
    CHECK(w_of(h_graph(n, 2)) == closed_form_w_h23(n));
    CHECK(w_of(h_graph(n, 3)) == closed_form_w_h23(n));
    CHECK(girth(h_graph(n, 2)) == 4);
    CHECK(girth(h_graph(n, 0)) == 3);
    CHECK(girth(h_graph(n, 1)) == 3);
    CHECK(girth(h_graph(n, 3)) == 3);
    for (int k = 0; k <= 3; ++k) {
      CHECK(h_graph(n, k).n() == n);
      CHECK(cyclomatic_number(h_graph(n, k)) == 1);
    }
  }
  CHECK(w_of(h_graph(10, 2)) == 144);
  CHECK(w_of(h_graph(11, 2)) == 196);
  CHECK(w_of(cr_paths(3, {5, 3, 0})) == 196);  // C_3(P_6,P_4,P_1) ties at n=11
  CHECK_THROWS_AS(h_graph(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(h_graph(10, 4), std::invalid_argument);
}

TEST_CASE("bicyclic families") {
  CHECK(k4_minus().m() == 5);
  CHECK(w_of(b1(5)) == 14);
  CHECK(w_of(b1(6)) == 26);
  for (int n = 5; n <= 14; ++n) CHECK(w_of(b1(n)) == closed_form_w_b1(n));

  CHECK(w_of(b_ns(6, 1)) == 27);
  CHECK(w_of(dumbbell(6, 3, 3)) == 27);
  CHECK(w_of(b_ns(8, 2)) == 69);
  CHECK(w_of(b1(8)) == 69);
  CHECK(w_of(b_ns(6, 0)) == 28);
  CHECK(sz_of(b_ns(5, 0)) == 19);

  for (int n = 4; n <= 13; ++n) {
    for (int s = 0; 2 * s <= n - 4; ++s) {
      Graph b = b_ns(n, s);
      CHECK(b.n() == n);
      CHECK(cyclomatic_number(b) == 2);
      CHECK(w_of(b) == closed_form_w_bns(n, s));
      CHECK(sz_of(b) == closed_form_sz_bns(n, s));
    }
  }
  for (int n = 6; n <= 12; ++n) CHECK(cyclomatic_number(dumbbell(n, 3, 3)) == 2);
  CHECK(cyclomatic_number(theta(1, 2, 4)) == 2);
  CHECK(canonical_key(theta(1, 2, 2)) == canonical_key(k4_minus()));
  CHECK_THROWS_AS(theta(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(dumbbell(7, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(b_ns(8, 3), std::invalid_argument);
}

TEST_CASE("a_nk family") {
  // A_{n,4}^0 is the spider with a long leg of n-4 and three unit legs
  CHECK(canonical_key(a_nk(8, 4, 0)) == canonical_key(spider(8, {4, 1, 1, 1}).tree));
  for (int i = 0; i <= 3; ++i) {
    CHECK(diameter(all_pairs_distances(a_nk(8, 4, i))) == 5);
    CHECK(a_nk(8, 4, i).m() == 7 + i);
  }
  // transmission at the non-unit leaf (vertex n-k) hits (n^2-n-6)/2
  DistanceMatrix dm = all_pairs_distances(a_nk(8, 4, 0));
  CHECK(transmission(dm, 4) == 25);
  for (int n = 6; n <= 10; ++n)
    for (int i = 0; i <= 3; ++i)
      CHECK(transmission(all_pairs_distances(a_nk(n, 4, i)), n - 4) ==
            (static_cast<std::int64_t>(n) * n - n - 6) / 2);
  CHECK_THROWS_AS(a_nk(8, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(a_nk(4, 4, 0), std::invalid_argument);
  // the n = 5 family degenerates to the star plus leaf edges but still exists
  CHECK(canonical_key(a_nk(5, 4, 0)) == canonical_key(star(5)));
}

TEST_CASE("closed-form lollipop W for even girth") {
  CHECK(closed_form_w_lollipop_even(8, 6) == 64);
  CHECK(closed_form_w_lollipop_even(10, 4) == (1000 - 130 + 36) / 6);
  for (int n = 5; n <= 13; ++n)
    for (int r = 4; r < n; r += 2) CHECK(closed_form_w_lollipop_even(n, r) == w_of(lollipop(n, r)));
  CHECK_THROWS_AS(closed_form_w_lollipop_even(8, 5), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_w_lollipop_even(8, 8), std::invalid_argument);
}

TEST_CASE("B(n,s) monotonicity in s") {
  for (int n = 6; n <= 20; ++n) {
    for (int s = 0; 2 * (s + 1) <= n - 4; ++s) {
      CHECK(closed_form_w_bns(n, s + 1) < closed_form_w_bns(n, s));
      CHECK(closed_form_sz_bns(n, s + 1) > closed_form_sz_bns(n, s));
    }
  }
}

TEST_CASE("theorem bounds") {
  CHECK(theorem_bounds(5).thm2_3_min == Rational(8, 7));
  CHECK(theorem_bounds(10).thm2_4_min == Rational(1) + Rational(192, 864));
  CHECK(theorem_bounds(10).thm2_4_min == Rational(11, 9));
  CHECK(theorem_bounds(4).thm1_3_diff == Rational(13, 2));
  CHECK(theorem_bounds(5).thm1_5_max == Rational(7, 4));
  CHECK(theorem_bounds(8).thm1_4_nonbip == Rational(1) + Rational(3 * 90, 2 * 468));
  // the theorem 2.4 bound at n=10 equals Sz*/W of H_10^2 exactly
  Graph h = h_graph(10, 2);
  DistanceMatrix dm = all_pairs_distances(h);
  CHECK(szstar_over_w(h, dm) == theorem_bounds(10).thm2_4_min);
  Graph l = lollipop(10, 4);
  DistanceMatrix dl = all_pairs_distances(l);
  CHECK(szstar_over_w(l, dl) == theorem_bounds(10).thm1_4_bip);
}

TEST_CASE("family id text syntax") {
  for (const char* text : {"path:7", "cycle:5", "star:6", "complete:4", "k4minus", "lollipop:10:4",
                           "b1:8", "bns:8:2", "dumbbell:9:3:4", "theta:1:2:4", "crpaths:3:5,3,2",
                           "crstars:4:2,0,1,0", "h:12:2", "spider:8:3,3,1", "ank:8:4:1"}) {
    FamilyId id = FamilyId::parse(text);
    CHECK(id.str() == text);
    CHECK(id.build().n() >= 1);
  }
  CHECK(FamilyId::parse("lollipop:8:6").build().n() == 8);
  CHECK(w_of(FamilyId::parse("lollipop:8:6").build()) == 64);
  CHECK(w_of(FamilyId::parse("bns:8:2").build()) == 69);
  CHECK(w_of(FamilyId::parse("h:10:2").build()) == 144);
  CHECK_THROWS_AS(FamilyId::parse("nosuch:3"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyId::parse("lollipop:8"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyId::parse("lollipop:8:x"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyId::parse("crpaths:3:"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyId::parse("bns:8:9").build(), std::invalid_argument);
}

TEST_CASE("sandwich: stars minimize and paths maximize W over rooted-tree gluings") {
  // every rooted-tree assignment for r = 3, 4 with at most 6 extra vertices
  for (int r : {3, 4}) {
    std::vector<std::vector<int>> size_vectors;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == r) {
        size_vectors.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[static_cast<std::size_t>(idx)] = v;
        rec(idx + 1, left - v);
      }
    };
    rec(0, 6);
    for (const auto& sizes : size_vectors) {
      int total = 0;
      for (int s : sizes) total += s;
      if (total == 0) continue;
      Graph lo = cr_stars(r, sizes);
      Graph hi = cr_paths(r, sizes);
      std::int64_t wlo = w_of(lo), whi = w_of(hi);
      // all tuples of (tree, root) choices across the nontrivial slots
      std::vector<std::vector<RootedTree>> options(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) {
        int k = sizes[static_cast<std::size_t>(i)] + 1;
        if (k == 1) {
          options[static_cast<std::size_t>(i)].push_back({path(1), 0});
          continue;
        }
        for (const Graph& t : cached_class(ClassSpec::GraphClass::trees, k))
          for (int root = 0; root < k; ++root) options[static_cast<std::size_t>(i)].push_back({t, root});
      }
      std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
      for (;;) {
        std::vector<RootedTree> ts;
        for (int i = 0; i < r; ++i)
          ts.push_back(options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
        Graph mid = cycle_with_rooted_trees(r, ts);
        std::int64_t wm = w_of(mid);
        REQUIRE(wlo <= wm);
        REQUIRE(wm <= whi);
        if (wm == whi) REQUIRE(canonical_key(mid) == canonical_key(hi));
        if (wm == wlo) REQUIRE(canonical_key(mid) == canonical_key(lo));
        int i = 0;
        while (i < r && ++pick[static_cast<std::size_t>(i)] == options[static_cast<std::size_t>(i)].size())
          pick[static_cast<std::size_t>(i++)] = 0;
        if (i == r) break;
      }
    }
  }
}
