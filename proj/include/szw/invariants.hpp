#pragma once

#include <cstdint>

#include "szw/distance.hpp"
#include "szw/graph.hpp"
#include "szw/rational.hpp"

namespace szw {

// Counts for one edge uv: vertices strictly closer to u, strictly closer to
// v, and equidistant. n_u + n_v + n_0 = n, and both endpoint counts are >= 1.
struct EdgeSplit {
  int n_u = 0;
  int n_v = 0;
  int n_0 = 0;
};

inline EdgeSplit edge_split(const DistanceMatrix& dm, int u, int v) {
  if (u == v || dm.at(u, v) != 1) throw std::invalid_argument("edge_split: uv is not an edge");
  EdgeSplit s;
  for (int w = 0; w < dm.n(); ++w) {
    int du = dm.at(u, w), dv = dm.at(v, w);
    if (du < dv)
      ++s.n_u;
    else if (dv < du)
      ++s.n_v;
    else
      ++s.n_0;
  }
  return s;
}

// W(G): sum of distances over unordered pairs.
inline std::int64_t wiener(const DistanceMatrix& dm) {
  std::int64_t w = 0;
  for (int i = 0; i < dm.n(); ++i)
    for (int j = i + 1; j < dm.n(); ++j) w += dm.at(i, j);
  return w;
}

// Tree-only edge form of W: sum over edges of the two component sizes after
// deleting the edge. Computed by BFS on G - e, independently of any distance
// matrix, so it can cross-check the pair-sum route.
inline std::int64_t wiener_tree_edge_form(const Graph& g) {
  if (!g.is_connected() || g.m() != g.n() - 1)
    throw std::invalid_argument("wiener_tree_edge_form: input is not a tree");
  std::int64_t w = 0;
  for (auto [u, v] : g.edges()) {
    // size of u's component in G - uv
    std::uint64_t seen = 1ULL << u;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int x = std::countr_zero(f);
        f &= f - 1;
        std::uint64_t r = g.row(x);
        if (x == u) r &= ~(1ULL << v);
        next |= r;
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    std::int64_t nu = std::popcount(seen);
    w += nu * (g.n() - nu);
  }
  return w;
}

// Sz(G): sum over edges of n_u * n_v.
inline std::int64_t szeged(const Graph& g, const DistanceMatrix& dm) {
  std::int64_t sz = 0;
  for (auto [u, v] : g.edges()) {
    EdgeSplit s = edge_split(dm, u, v);
    sz += static_cast<std::int64_t>(s.n_u) * s.n_v;
  }
  return sz;
}

// 4*Sz*(G) = sum over edges of (2 n_u + n_0)(2 n_v + n_0); always an integer.
inline std::int64_t revised_szeged_x4(const Graph& g, const DistanceMatrix& dm) {
  std::int64_t sz4 = 0;
  for (auto [u, v] : g.edges()) {
    EdgeSplit s = edge_split(dm, u, v);
    sz4 += static_cast<std::int64_t>(2 * s.n_u + s.n_0) * (2 * s.n_v + s.n_0);
  }
  return sz4;
}

inline Rational revised_szeged(const Graph& g, const DistanceMatrix& dm) {
  return Rational(revised_szeged_x4(g, dm), 4);
}

inline std::int64_t sz_minus_w(const Graph& g, const DistanceMatrix& dm) {
  return szeged(g, dm) - wiener(dm);
}

inline Rational sz_over_w(const Graph& g, const DistanceMatrix& dm) {
  if (g.n() < 2) throw std::invalid_argument("ratio undefined for a single vertex");
  return Rational(szeged(g, dm), wiener(dm));
}

inline Rational szstar_over_w(const Graph& g, const DistanceMatrix& dm) {
  if (g.n() < 2) throw std::invalid_argument("ratio undefined for a single vertex");
  return Rational(revised_szeged_x4(g, dm), 4 * wiener(dm));
}

}  // namespace szw
