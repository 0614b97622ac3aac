#include <algorithm>
#include <bit>

#include "doctest.h"
#include "oracles.hpp"
#include "szw/canonical.hpp"
#include "szw/distance.hpp"
#include "szw/enumerate.hpp"
#include "szw/families.hpp"
#include "szw/invariants.hpp"
#include "szw/structure.hpp"

using namespace szw;

TEST_CASE("from_edges builds simple graphs and rejects bad input") {
  Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.n() == 3);
  CHECK(c3.m() == 3);
  CHECK(girth(c3) == 3);

  Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(k2.m() == 1);

  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.m() == 4);
  CHECK(girth(c4) == 4);

  // duplicates collapse
  CHECK(Graph::from_edges(2, {{0, 1}, {1, 0}}).m() == 1);

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::empty(65), std::invalid_argument);
  CHECK_THROWS_AS(Graph::empty(0), std::invalid_argument);
}

TEST_CASE("all_pairs_distances: BFS-exact values and the connectivity failure") {
  Graph p3 = path(3);
  DistanceMatrix dm = all_pairs_distances(p3);
  CHECK(dm.at(0, 2) == 2);

  DistanceMatrix c5 = all_pairs_distances(cycle(5));
  for (int i = 0; i < 5; ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < 5; ++j) {
      if (i != j) CHECK((c5.at(i, j) == 1 || c5.at(i, j) == 2));
      row += c5.at(i, j);
    }
    CHECK(row == 6);
  }

  DistanceMatrix c4 = all_pairs_distances(cycle(4));
  CHECK(c4.at(0, 2) == 2);
  CHECK(c4.at(1, 3) == 2);

  Graph two_parts = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(all_pairs_distances(two_parts), not_connected_error);
}

TEST_CASE("transmission") {
  DistanceMatrix c4 = all_pairs_distances(cycle(4));
  for (int v = 0; v < 4; ++v) CHECK(transmission(c4, v) == 4);

  // L_{5,4}: the degree-3 apex sees 1+1+2+1
  Graph l54 = lollipop(5, 4);
  DistanceMatrix dm = all_pairs_distances(l54);
  CHECK(transmission(dm, 0) == 5);

  DistanceMatrix p5 = all_pairs_distances(path(5));
  CHECK(transmission(p5, 0) == 10);  // n(n-1)/2 at a path end
}

TEST_CASE("eta_profile") {
  DistanceMatrix c6 = all_pairs_distances(cycle(6));
  CHECK(eta_profile(c6, 0) == std::vector<int>{1, 2, 2, 1});

  DistanceMatrix s5 = all_pairs_distances(star(5));
  CHECK(eta_profile(s5, 0) == std::vector<int>{1, 4});

  DistanceMatrix p4 = all_pairs_distances(path(4));
  CHECK(eta_profile(p4, 0) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("girth") {
  CHECK_FALSE(girth(path(6)).has_value());
  CHECK_FALSE(girth(star(7)).has_value());
  for (int n = 5; n <= 9; ++n) CHECK(girth(lollipop(n, 4)) == 4);
  CHECK(girth(k4_minus()) == 3);
  CHECK(girth(complete(6)) == 3);
  CHECK(girth(theta(2, 3, 4)) == 5);
}

TEST_CASE("diameter") {
  for (int n = 5; n <= 12; ++n) CHECK(diameter(all_pairs_distances(b_ns(n, 0))) == n - 2);
  CHECK(diameter(all_pairs_distances(cycle(6))) == 3);
  for (int n = 5; n <= 12; ++n) CHECK(diameter(all_pairs_distances(b1(n))) == n - 3);
}

TEST_CASE("blocks") {
  Graph l63 = lollipop(6, 3);
  BlockDecomposition bd = blocks(l63);
  CHECK(bd.blocks.size() == 4);  // triangle + 3 tail edges
  int triangles = 0;
  for (std::uint64_t b : bd.blocks) triangles += std::popcount(b) == 3;
  CHECK(triangles == 1);

  CHECK(blocks(complete(4)).blocks.size() == 1);

  BlockDecomposition d66 = blocks(dumbbell(6, 3, 3));
  CHECK(d66.blocks.size() == 3);
  CHECK(std::popcount(d66.cut_vertices) == 2);

  CHECK_THROWS_AS(blocks(Graph::from_edges(3, {{0, 1}})), not_connected_error);
}

TEST_CASE("all_blocks_complete") {
  CHECK(all_blocks_complete(path(7)));
  CHECK_FALSE(all_blocks_complete(cycle(4)));
  Graph bowtie = coalesce(cycle(3), 0, cycle(3), 0);
  CHECK(all_blocks_complete(bowtie));
  CHECK(all_blocks_complete(complete(5)));
  CHECK_FALSE(all_blocks_complete(b1(5)));
}

TEST_CASE("is_bipartite") {
  CHECK(is_bipartite(cycle(4)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  for (int n = 5; n <= 9; ++n) CHECK(is_bipartite(lollipop(n, 4)));
  CHECK_FALSE(is_bipartite(k4_minus()));
}

TEST_CASE("cyclomatic_number") {
  CHECK(cyclomatic_number(path(6)) == 0);
  CHECK(cyclomatic_number(h_graph(9, 2)) == 1);
  CHECK(cyclomatic_number(theta(1, 2, 4)) == 2);
}

TEST_CASE("coalesce") {
  for (int n = 5; n <= 9; ++n) {
    Graph glued = coalesce(cycle(3), 0, path(n - 2), 0);
    CHECK(canonical_key(glued) == canonical_key(lollipop(n, 3)));
  }
  Graph g = h_graph(8, 0);
  CHECK(canonical_key(coalesce(Graph::empty(1), 0, g, 3)) == canonical_key(g));
  CHECK(canonical_key(coalesce(cycle(4), 1, path(2), 1)) == canonical_key(lollipop(5, 4)));
  // vertex count bookkeeping
  CHECK(coalesce(cycle(4), 0, star(5), 0).n() == 8);
}

TEST_CASE("triangle inequality over every connected graph up to n=7") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : cached_class(ClassSpec::GraphClass::connected, n)) {
      DistanceMatrix dm = all_pairs_distances(g);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          for (int w = 0; w < n; ++w) REQUIRE(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w));
    }
  }
}

TEST_CASE("pair-sum W equals the half-transmission form") {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : cached_class(ClassSpec::GraphClass::connected, n)) {
      DistanceMatrix dm = all_pairs_distances(g);
      std::int64_t twice = 0;
      for (int v = 0; v < n; ++v) twice += transmission(dm, v);
      REQUIRE(2 * wiener(dm) == twice);
    }
  }
}

TEST_CASE("distance matrix agrees with the Floyd-Warshall oracle") {
  for (const Graph& g : cached_class(ClassSpec::GraphClass::connected, 6)) {
    DistanceMatrix dm = all_pairs_distances(g);
    CHECK(wiener(dm) == oracle::wiener(g));
  }
}
