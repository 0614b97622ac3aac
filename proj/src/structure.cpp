#include "szw/structure.hpp"

#include <algorithm>
#include <array>

namespace szw {

std::optional<int> girth(const Graph& g) {
  // BFS from each vertex; a non-tree edge at depths (du, dv) seen from the
  // BFS root closes a cycle of length du + dv + 1, and the minimum over all
  // roots is exact for unweighted graphs.
  int best = kMaxVertices + 1;
  std::array<int, kMaxVertices> dist{};
  std::array<int, kMaxVertices> parent{};
  std::array<int, kMaxVertices> queue{};
  for (int s = 0; s < g.n(); ++s) {
    dist.fill(-1);
    parent.fill(-1);
    int head = 0, tail = 0;
    queue[tail++] = s;
    dist[static_cast<std::size_t>(s)] = 0;
    while (head < tail) {
      int v = queue[head++];
      if (2 * dist[static_cast<std::size_t>(v)] >= best) break;
      std::uint64_t r = g.row(v);
      while (r) {
        int w = std::countr_zero(r);
        r &= r - 1;
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue[tail++] = w;
        } else if (w != parent[static_cast<std::size_t>(v)]) {
          best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  if (best > kMaxVertices) return std::nullopt;
  return best;
}

namespace {

struct BlockDfs {
  const Graph* g = nullptr;
  BlockDecomposition* out = nullptr;
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  std::array<std::pair<int, int>, kMaxVertices * kMaxVertices / 2> stack{};
  int sp = 0;
  int timer = 0;

  void pop_block(int u, int v) {
    std::uint64_t verts = 0;
    while (sp > 0) {
      auto [a, b] = stack[static_cast<std::size_t>(sp - 1)];
      --sp;
      verts |= (1ULL << a) | (1ULL << b);
      if (a == u && b == v) break;
    }
    out->blocks.push_back(verts);
  }

  void dfs(int u, int parent_edge) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    std::uint64_t r = g->row(u);
    while (r) {
      int v = std::countr_zero(r);
      r &= r - 1;
      if (disc[static_cast<std::size_t>(v)] < 0) {
        ++children;
        stack[static_cast<std::size_t>(sp++)] = {u, v};
        dfs(v, u);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if ((parent_edge < 0 && children > 1) ||
            (parent_edge >= 0 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]))
          out->cut_vertices |= 1ULL << u;
        if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) pop_block(u, v);
      } else if (v != parent_edge && disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
        stack[static_cast<std::size_t>(sp++)] = {u, v};
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  if (!g.is_connected()) throw not_connected_error("blocks: graph is not connected");
  BlockDecomposition out;
  if (g.n() == 1) return out;
  BlockDfs d;
  d.g = &g;
  d.out = &out;
  d.disc.fill(-1);
  d.low.fill(-1);
  d.dfs(0, -1);
  return out;
}

bool all_blocks_complete(const Graph& g) {
  for (std::uint64_t b : blocks(g).blocks) {
    std::uint64_t verts = b;
    while (verts) {
      int v = std::countr_zero(verts);
      verts &= verts - 1;
      if ((g.row(v) & b) != (b & ~(1ULL << v))) return false;
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::array<int, kMaxVertices> color{};
  color.fill(-1);
  std::array<int, kMaxVertices> queue{};
  for (int s = 0; s < g.n(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      std::uint64_t r = g.row(v);
      while (r) {
        int w = std::countr_zero(r);
        r &= r - 1;
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(v)] ^ 1;
          queue[tail++] = w;
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

int cyclomatic_number(const Graph& g) {
  if (!g.is_connected()) throw not_connected_error("cyclomatic_number: graph is not connected");
  return g.m() - g.n() + 1;
}

Graph coalesce(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (!g1.is_connected() || !g2.is_connected())
    throw not_connected_error("coalesce: both parts must be connected");
  if (v1 < 0 || v1 >= g1.n() || v2 < 0 || v2 >= g2.n())
    throw std::invalid_argument("coalesce: vertex out of range");
  const int n = g1.n() + g2.n() - 1;
  std::vector<int> map2(static_cast<std::size_t>(g2.n()));
  int next = g1.n();
  for (int v = 0; v < g2.n(); ++v) map2[static_cast<std::size_t>(v)] = (v == v2) ? v1 : next++;
  std::vector<std::pair<int, int>> es = g1.edges();
  for (auto [u, v] : g2.edges())
    es.emplace_back(map2[static_cast<std::size_t>(u)], map2[static_cast<std::size_t>(v)]);
  return Graph::from_edges(n, es);
}

}  // namespace szw
