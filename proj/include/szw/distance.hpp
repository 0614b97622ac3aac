#pragma once

#include <cstdint>
#include <vector>

#include "szw/graph.hpp"

namespace szw {

// All-pairs shortest-path distances of a connected graph, 8-bit entries
// (the diameter is < 64 for any graph we accept). Construction fails with
// not_connected_error on disconnected input.
class DistanceMatrix {
 public:
  int n() const { return n_; }
  std::uint8_t at(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

  friend DistanceMatrix all_pairs_distances(const Graph& g);

 private:
  int n_ = 0;
  std::vector<std::uint8_t> d_;
};

// BFS from every vertex, level sets held as bit masks.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n_ = g.n();
  dm.d_.assign(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(g.n()), 0);
  const std::uint64_t all = g.vertex_mask();
  for (int s = 0; s < g.n(); ++s) {
    std::uint64_t seen = 1ULL << s;
    std::uint64_t frontier = seen;
    int dist = 0;
    while (frontier) {
      std::uint64_t f = frontier;
      std::uint64_t next = 0;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        dm.d_[static_cast<std::size_t>(s) * static_cast<std::size_t>(g.n()) + static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(dist);
        next |= g.row(v);
      }
      frontier = next & ~seen;
      seen |= frontier;
      ++dist;
    }
    if (seen != all) throw not_connected_error("graph is not connected");
  }
  return dm;
}

// D_G(v): sum of distances from v to every vertex.
inline std::int64_t transmission(const DistanceMatrix& dm, int v) {
  std::int64_t s = 0;
  for (int u = 0; u < dm.n(); ++u) s += dm.at(v, u);
  return s;
}

// Entry i counts the vertices at distance exactly i from v; entry 0 is 1.
inline std::vector<int> eta_profile(const DistanceMatrix& dm, int v) {
  int ecc = 0;
  for (int u = 0; u < dm.n(); ++u) ecc = std::max<int>(ecc, dm.at(v, u));
  std::vector<int> eta(static_cast<std::size_t>(ecc) + 1, 0);
  for (int u = 0; u < dm.n(); ++u) ++eta[dm.at(v, u)];
  return eta;
}

inline int diameter(const DistanceMatrix& dm) {
  int d = 0;
  for (int i = 0; i < dm.n(); ++i)
    for (int j = i + 1; j < dm.n(); ++j) d = std::max<int>(d, dm.at(i, j));
  return d;
}

}  // namespace szw
