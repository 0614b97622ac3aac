#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szw/graph.hpp"
#include "szw/rational.hpp"

namespace szw {

struct RootedTree {
  Graph tree;
  int root = 0;
};

// Standard constructions. Vertex layouts are fixed and documented per
// constructor so callers can address distinguished vertices.
Graph path(int n);      // chain 0-1-...-(n-1)
Graph cycle(int n);     // 0-1-...-(n-1)-0, n >= 3
Graph star(int n);      // center 0
Graph complete(int n);

// Cycle C_r with a tail: vertex 0 of the cycle is identified with one end of
// a path on n-r+1 vertices. r = n gives the plain cycle.
Graph lollipop(int n, int r);

// C_r with rooted trees T_1..T_r glued root-onto-cycle. Cycle vertices are
// 0..r-1; tree i's non-root vertices follow in order.
Graph cycle_with_rooted_trees(int r, const std::vector<RootedTree>& trees);

// Convenience wrappers; sizes[i] counts the non-root vertices at position i.
Graph cr_paths(int r, const std::vector<int>& sizes);  // paths rooted at an end
Graph cr_stars(int r, const std::vector<int>& sizes);  // stars rooted at the center

// Spider with one branch vertex (id 0) and the given leg lengths; legs sum to
// n-1. The default root is the tip of the first longest leg (the non-unit
// leaf used throughout the extremal arguments).
RootedTree spider(int n, const std::vector<int>& legs);
RootedTree spider_center_rooted(int n, const std::vector<int>& legs);

// The four unicyclic graphs tied to the seventh-largest-W tier: cycles with a
// spider (and for k=3 an extra pendant) glued on. Requires n >= 8.
//   k=0: C_3 + spider(n-2, {n-5,1,1})      k=1: C_3 + spider(n-2, {n-6,2,1})
//   k=2: C_4 + spider(n-3, {n-6,1,1})      k=3: C_3 with a pendant, + spider(n-3, {n-6,1,1})
Graph h_graph(int n, int k);

Graph k4_minus();  // K_4 minus one edge; vertices 0,1 keep degree 3

// K_4^- with a tail of n-4 vertices hung from a degree-3 vertex.
Graph b1(int n);

// K_4^- with paths on n-s-4 and s vertices attached (by a new edge) to the
// two degree-2 vertices. 0 <= s <= (n-4)/2.
Graph b_ns(int n, int s);

// Cycles C_p and C_q joined by a path of length n-p-q+1 (p, q >= 3, p+q <= n).
Graph dumbbell(int n, int p, int q);

// Two hubs joined by three internally disjoint paths of lengths k <= l <= t,
// k+l+t = n+1, l >= 2.
Graph theta(int k, int l, int t);

// Spider with a long leg of n-k edges and k-1 unit legs, plus i extra edges
// joining unit leaves (lexicographically first pairs). The tip of the long
// leg, vertex n-k, is the non-unit leaf. 0 <= i <= (k-1)(k-2)/2.
Graph a_nk(int n, int k, int i);

// Closed forms, all in exact integer arithmetic.
std::int64_t closed_form_w_path(int n);
std::int64_t closed_form_w_cycle(int n);
std::int64_t closed_form_w_star(int n);
std::int64_t closed_form_w_complete(int n);
std::int64_t closed_form_w_lollipop_even(int n, int r);  // even r, 4 <= r < n
std::int64_t closed_form_w_bns(int n, int s);
std::int64_t closed_form_sz_bns(int n, int s);
std::int64_t closed_form_w_b1(int n);   // (n^3 - 19n + 54) / 6
std::int64_t closed_form_w_h23(int n);  // same value as b1

// Every bound used by the theorem checkers, as exact rationals. n >= 4.
struct TheoremBounds {
  Rational thm1_1_diff;    // min Sz - W over bipartite, m >= n
  Rational thm1_2_diff;    // min Sz - W, odd cycle, girth >= 5
  Rational thm1_3_diff;    // min Sz* - W, odd cycle
  Rational thm1_4_bip;     // min Sz*/W over bipartite cyclic
  Rational thm1_4_nonbip;  // min Sz*/W over non-bipartite cyclic
  Rational thm1_5_max;     // max Sz/W over unicyclic
  Rational thm1_6_max;     // max Sz*/W over unicyclic
  Rational thm1_7_bip;     // min Sz/W, bipartite, girth >= 4
  Rational thm1_7_nonbip;  // min Sz/W, non-bipartite, girth >= 4
  Rational thm2_3_min;     // min Sz/W with a non-complete block
  Rational thm2_4_min;     // second-smallest Sz*/W over cyclic graphs
  Rational max_w_odd_girth;   // max W, unicyclic, odd girth >= 5
  Rational max_w_even_girth;  // max W, unicyclic, even girth >= 6
};
TheoremBounds theorem_bounds(int n);

// Tagged family constructor with the stable text syntax used by the CLI,
// e.g. "lollipop:10:4", "bns:8:2", "crpaths:3:5,3,2".
struct FamilyId {
  enum class Kind {
    path, cycle, star, complete, k4minus, lollipop, b1, bns, dumbbell,
    theta, crpaths, crstars, h, spider, ank,
  };
  Kind kind{};
  std::vector<int> args;  // scalar parameters, in syntax order
  std::vector<int> list;  // trailing comma list (crpaths/crstars/spider)

  std::string str() const;
  Graph build() const;
  static FamilyId parse(const std::string& text);

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Candidate ids for identification at order n, most specific first.
std::vector<FamilyId> family_candidates(int n);

}  // namespace szw
