#include "szw/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>

namespace szw {
namespace {

constexpr int kMaxWords = (kMaxVertices * (kMaxVertices - 1) / 2 + 63) / 64;

struct Encoding {
  std::array<std::uint64_t, kMaxWords> w;

  static int words_for(int n) { return (n * (n - 1) / 2 + 63) / 64; }
};

// Ordered partition of the vertices: elems is a permutation, start[p] marks
// the positions where a cell begins. Cells are refined in place.
struct Partition {
  std::array<std::uint8_t, kMaxVertices> elems;
  std::array<bool, kMaxVertices> start;
};

// McKay-style individualization-refinement canonical search. The canonical
// form is the lexicographically smallest upper-triangle encoding over the
// leaves of the search tree. Leaves that reproduce the current best encoding
// yield automorphisms, which prune sibling branches lying in the same orbit
// of the subgroup fixing the individualized prefix.
struct Search {
  int n = 0;
  int words = 0;
  std::array<std::uint64_t, kMaxVertices> adj{};

  Encoding best{};
  std::array<std::uint8_t, kMaxVertices> best_order{};
  bool have_best = false;

  static constexpr int kMaxGens = 64;
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxGens> gens{};
  int ngens = 0;

  std::array<std::uint8_t, kMaxVertices> prefix{};

  std::uint64_t cell_mask(const Partition& p, int a, int b) const {
    std::uint64_t m = 0;
    for (int i = a; i < b; ++i) m |= 1ULL << p.elems[static_cast<std::size_t>(i)];
    return m;
  }

  int cell_end(const Partition& p, int a) const {
    int b = a + 1;
    while (b < n && !p.start[static_cast<std::size_t>(b)]) ++b;
    return b;
  }

  // Splits every cell by neighbor counts into the given splitter mask.
  // Returns true if anything split.
  bool split_round(Partition& p, std::uint64_t smask) const {
    bool changed = false;
    std::array<std::pair<int, std::uint8_t>, kMaxVertices> tmp;
    for (int a = 0; a < n;) {
      int b = cell_end(p, a);
      if (b - a > 1) {
        int lo = kMaxVertices + 1, hi = -1;
        for (int i = a; i < b; ++i) {
          int c = std::popcount(adj[p.elems[static_cast<std::size_t>(i)]] & smask);
          tmp[static_cast<std::size_t>(i - a)] = {c, p.elems[static_cast<std::size_t>(i)]};
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo != hi) {
          std::stable_sort(tmp.begin(), tmp.begin() + (b - a),
                           [](const auto& x, const auto& y) { return x.first < y.first; });
          for (int k = 0; k < b - a; ++k) {
            p.elems[static_cast<std::size_t>(a + k)] = tmp[static_cast<std::size_t>(k)].second;
            if (k > 0 && tmp[static_cast<std::size_t>(k)].first != tmp[static_cast<std::size_t>(k - 1)].first)
              p.start[static_cast<std::size_t>(a + k)] = true;
          }
          changed = true;
        }
      }
      a = b;
    }
    return changed;
  }

  // Equitable refinement: uses freshly split cells as splitters, then a full
  // verification sweep over all cells until nothing moves.
  void refine(Partition& p) const {
    std::array<std::uint64_t, 4 * kMaxVertices> queue;
    int qh = 0, qt = 0;
    for (int a = 0; a < n; a = cell_end(p, a)) queue[static_cast<std::size_t>(qt++)] = cell_mask(p, a, cell_end(p, a));
    for (;;) {
      while (qh < qt) {
        std::uint64_t smask = queue[static_cast<std::size_t>(qh++)];
        if (split_round(p, smask)) {
          if (qt > 3 * kMaxVertices) {  // compact, keep the unprocessed tail
            std::copy(queue.begin() + qh, queue.begin() + qt, queue.begin());
            qt -= qh;
            qh = 0;
          }
          for (int a = 0; a < n; a = cell_end(p, a)) {
            int b = cell_end(p, a);
            if (b - a < n) queue[static_cast<std::size_t>(qt++)] = cell_mask(p, a, b);
            if (qt > 3 * kMaxVertices) break;
          }
        }
      }
      // verification sweep: one pass with every cell as splitter
      bool any = false;
      for (int a = 0; a < n && !any; a = cell_end(p, a))
        any = split_round(p, cell_mask(p, a, cell_end(p, a)));
      if (!any) return;
      qh = qt = 0;
      for (int a = 0; a < n; a = cell_end(p, a)) queue[static_cast<std::size_t>(qt++)] = cell_mask(p, a, cell_end(p, a));
    }
  }

  void encode(const std::array<std::uint8_t, kMaxVertices>& order, Encoding& e) const {
    for (int i = 0; i < words; ++i) e.w[static_cast<std::size_t>(i)] = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t r = adj[order[static_cast<std::size_t>(i)]];
      for (int j = i + 1; j < n; ++j, ++bit)
        e.w[static_cast<std::size_t>(bit >> 6)] |=
            ((r >> order[static_cast<std::size_t>(j)]) & 1ULL) << (63 - (bit & 63));
    }
  }

  int compare(const Encoding& a, const Encoding& b) const {
    for (int i = 0; i < words; ++i) {
      if (a.w[static_cast<std::size_t>(i)] != b.w[static_cast<std::size_t>(i)])
        return a.w[static_cast<std::size_t>(i)] < b.w[static_cast<std::size_t>(i)] ? -1 : 1;
    }
    return 0;
  }

  void leaf(const Partition& p) {
    Encoding e;
    encode(p.elems, e);
    if (!have_best) {
      best = e;
      best_order = p.elems;
      have_best = true;
      return;
    }
    int c = compare(e, best);
    if (c < 0) {
      best = e;
      best_order = p.elems;
    } else if (c == 0 && ngens < kMaxGens) {
      // equal encodings under two orders give an automorphism
      auto& g = gens[static_cast<std::size_t>(ngens++)];
      for (int i = 0; i < n; ++i)
        g[best_order[static_cast<std::size_t>(i)]] = p.elems[static_cast<std::size_t>(i)];
    }
  }

  bool gen_fixes_prefix(const std::array<std::uint8_t, kMaxVertices>& g, int plen) const {
    for (int i = 0; i < plen; ++i) {
      std::uint8_t v = prefix[static_cast<std::size_t>(i)];
      if (g[v] != v) return false;
    }
    return true;
  }

  std::uint64_t orbit_closure(std::uint64_t set, int plen) const {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int gi = 0; gi < ngens; ++gi) {
        const auto& g = gens[static_cast<std::size_t>(gi)];
        if (!gen_fixes_prefix(g, plen)) continue;
        std::uint64_t img = 0;
        std::uint64_t s = set;
        while (s) {
          int v = std::countr_zero(s);
          s &= s - 1;
          img |= 1ULL << g[static_cast<std::size_t>(v)];
        }
        if (img & ~set) {
          set |= img;
          grew = true;
        }
      }
    }
    return set;
  }

  void node(Partition p, int plen) {
    refine(p);
    // smallest non-singleton cell, earliest on ties
    int ta = -1, tb = -1, tsize = kMaxVertices + 1;
    for (int a = 0; a < n;) {
      int b = cell_end(p, a);
      if (b - a > 1 && b - a < tsize) {
        ta = a;
        tb = b;
        tsize = b - a;
      }
      a = b;
    }
    if (ta < 0) {
      leaf(p);
      return;
    }
    std::array<std::uint8_t, kMaxVertices> cell{};
    for (int i = ta; i < tb; ++i) cell[static_cast<std::size_t>(i - ta)] = p.elems[static_cast<std::size_t>(i)];
    std::uint64_t branched = 0;
    for (int k = 0; k < tsize; ++k) {
      std::uint8_t v = cell[static_cast<std::size_t>(k)];
      if (branched && ngens > 0 && ((orbit_closure(branched, plen) >> v) & 1ULL)) continue;
      Partition q = p;
      q.elems[static_cast<std::size_t>(ta)] = v;
      int pos = ta + 1;
      for (int i = 0; i < tsize; ++i) {
        if (cell[static_cast<std::size_t>(i)] == v) continue;
        q.elems[static_cast<std::size_t>(pos++)] = cell[static_cast<std::size_t>(i)];
      }
      q.start[static_cast<std::size_t>(ta + 1)] = true;
      prefix[static_cast<std::size_t>(plen)] = v;
      node(q, plen + 1);
      branched |= 1ULL << v;
    }
  }

  void run(const Graph& g) {
    n = g.n();
    words = Encoding::words_for(n);
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.row(v);
    Partition p;
    for (int v = 0; v < n; ++v) {
      p.elems[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
      p.start[static_cast<std::size_t>(v)] = false;
    }
    p.start[0] = true;
    node(p, 0);
  }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
  Search s;
  s.run(g);
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) order[static_cast<std::size_t>(i)] = s.best_order[static_cast<std::size_t>(i)];
  return order;
}

CanonicalKey canonical_key(const Graph& g) {
  Search s;
  s.run(g);
  const int nbits = g.n() * (g.n() - 1) / 2;
  const int nbytes = (nbits + 7) / 8;
  CanonicalKey key;
  key.bytes.resize(static_cast<std::size_t>(1 + nbytes));
  key.bytes[0] = static_cast<char>(g.n());
  for (int b = 0; b < nbytes; ++b) {
    int word = b / 8, sub = b % 8;
    auto byte = static_cast<unsigned char>((s.best.w[static_cast<std::size_t>(word)] >> (56 - 8 * sub)) & 0xFF);
    key.bytes[static_cast<std::size_t>(1 + b)] = static_cast<char>(byte);
  }
  return key;
}

Graph canonical_form(const Graph& g) { return g.relabeled(canonical_order(g)); }

}  // namespace szw
