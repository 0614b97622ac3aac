#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace szw {

inline constexpr int kMaxVertices = 64;

// Signalled by operations that are defined only for connected graphs.
struct not_connected_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mask with bits 0..k-1 set.
inline std::uint64_t low_bits(int k) {
  return k >= 64 ? ~0ULL : ((1ULL << k) - 1);
}

// Simple undirected graph with vertex ids 0..n-1 and adjacency rows stored as
// 64-bit masks (n <= 64). No self-loops; rows are kept symmetric; the edge
// count is cached. Instances are immutable once built -- the with_*/without_*
// helpers return modified copies.
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in 1..64");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    return g;
  }

  // Builds the simple graph with exactly the given edges (duplicates collapse).
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) g.add_edge_checked(u, v);
    return g;
  }

  int n() const { return n_; }
  int m() const { return m_; }

  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  std::uint64_t vertex_mask() const { return low_bits(n_); }

  // Edges as (u, v) with u < v, in row-major order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
      std::uint64_t r = adj_[static_cast<std::size_t>(u)] & ~low_bits(u + 1);
      while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  // Vertices reachable from start, as a mask.
  std::uint64_t component_of(int start) const {
    std::uint64_t seen = 1ULL << start;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[static_cast<std::size_t>(v)];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  bool is_connected() const { return n_ > 0 && component_of(0) == vertex_mask(); }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge_checked(u, v);
    return g;
  }

  // Appends one vertex (id n) adjacent to the vertices in `neighbors`.
  Graph with_vertex(std::uint64_t neighbors) const {
    if (n_ + 1 > kMaxVertices) throw std::invalid_argument("graph order must be in 1..64");
    if (neighbors & ~vertex_mask()) throw std::invalid_argument("neighbor mask out of range");
    Graph g;
    g.n_ = n_ + 1;
    g.adj_ = adj_;
    g.adj_.push_back(neighbors);
    std::uint64_t nb = neighbors;
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      g.adj_[static_cast<std::size_t>(v)] |= 1ULL << n_;
    }
    g.m_ = m_ + std::popcount(neighbors);
    return g;
  }

  // Deletes vertex v; vertices above v shift down by one.
  Graph without_vertex(int v) const {
    if (n_ <= 1) throw std::invalid_argument("cannot delete the last vertex");
    Graph g = empty(n_ - 1);
    for (auto [a, b] : edges()) {
      if (a == v || b == v) continue;
      g.add_edge_checked(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return g;
  }

  // Relabels so that new vertex i is old vertex pos_to_old[i].
  Graph relabeled(const std::vector<int>& pos_to_old) const {
    if (static_cast<int>(pos_to_old.size()) != n_)
      throw std::invalid_argument("relabeling must cover all vertices");
    std::vector<int> old_to_new(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < n_; ++i) old_to_new[static_cast<std::size_t>(pos_to_old[static_cast<std::size_t>(i)])] = i;
    Graph g = empty(n_);
    for (auto [u, v] : edges())
      g.add_edge_checked(old_to_new[static_cast<std::size_t>(u)], old_to_new[static_cast<std::size_t>(v)]);
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  void add_edge_checked(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
    adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
    ++m_;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

}  // namespace szw
