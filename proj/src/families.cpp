#include "szw/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "szw/structure.hpp"

namespace szw {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::int64_t div_exact(std::int64_t num, std::int64_t den, const char* what) {
  require(num % den == 0, what);
  return num / den;
}

}  // namespace

Graph path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph star(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.emplace_back(0, i);
  return Graph::from_edges(n, es);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph lollipop(int n, int r) {
  require(r >= 3 && r <= n, "lollipop needs 3 <= r <= n");
  Graph g = cycle(r);
  for (int v = r; v < n; ++v) g = g.with_vertex(1ULL << (v == r ? 0 : v - 1));
  return g;
}

Graph cycle_with_rooted_trees(int r, const std::vector<RootedTree>& trees) {
  require(r >= 3, "cycle_with_rooted_trees needs r >= 3");
  require(static_cast<int>(trees.size()) == r, "cycle_with_rooted_trees needs one tree per cycle vertex");
  Graph g = cycle(r);
  for (int i = 0; i < r; ++i) {
    const RootedTree& t = trees[static_cast<std::size_t>(i)];
    require(t.tree.is_connected() && t.tree.m() == t.tree.n() - 1, "rooted component must be a tree");
    require(t.root >= 0 && t.root < t.tree.n(), "root out of range");
    if (t.tree.n() > 1) g = coalesce(g, i, t.tree, t.root);
  }
  return g;
}

Graph cr_paths(int r, const std::vector<int>& sizes) {
  require(static_cast<int>(sizes.size()) == r, "cr_paths needs one size per cycle vertex");
  std::vector<RootedTree> ts;
  for (int s : sizes) {
    require(s >= 0, "cr_paths sizes must be nonnegative");
    ts.push_back({path(s + 1), 0});
  }
  return cycle_with_rooted_trees(r, ts);
}

Graph cr_stars(int r, const std::vector<int>& sizes) {
  require(static_cast<int>(sizes.size()) == r, "cr_stars needs one size per cycle vertex");
  std::vector<RootedTree> ts;
  for (int s : sizes) {
    require(s >= 0, "cr_stars sizes must be nonnegative");
    ts.push_back({star(s + 1), 0});
  }
  return cycle_with_rooted_trees(r, ts);
}

RootedTree spider(int n, const std::vector<int>& legs) {
  std::int64_t total = 0;
  for (int l : legs) {
    require(l >= 1, "spider legs must be positive");
    total += l;
  }
  require(total == n - 1, "spider legs must sum to n - 1");
  std::vector<std::pair<int, int>> es;
  int next = 1;
  int longest = 0, longest_tip = 0;
  for (int l : legs) {
    int prev = 0;
    for (int k = 0; k < l; ++k) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    if (l > longest) {
      longest = l;
      longest_tip = prev;
    }
  }
  return {Graph::from_edges(n, es), longest_tip};
}

RootedTree spider_center_rooted(int n, const std::vector<int>& legs) {
  RootedTree t = spider(n, legs);
  t.root = 0;
  return t;
}

Graph h_graph(int n, int k) {
  require(n >= 8, "h_graph needs n >= 8");
  require(k >= 0 && k <= 3, "h_graph variant must be 0..3");
  switch (k) {
    case 0: {
      RootedTree t = spider(n - 2, {n - 5, 1, 1});
      return coalesce(cycle(3), 0, t.tree, t.root);
    }
    case 1: {
      RootedTree t = spider(n - 2, {n - 6, 2, 1});
      return coalesce(cycle(3), 0, t.tree, t.root);
    }
    case 2: {
      RootedTree t = spider(n - 3, {n - 6, 1, 1});
      return coalesce(cycle(4), 0, t.tree, t.root);
    }
    default: {
      Graph base = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}});
      RootedTree t = spider(n - 3, {n - 6, 1, 1});
      return coalesce(base, 0, t.tree, t.root);
    }
  }
}

Graph k4_minus() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph b1(int n) {
  require(n >= 5, "b1 needs n >= 5");
  Graph g = k4_minus();
  for (int v = 4; v < n; ++v) g = g.with_vertex(1ULL << (v == 4 ? 0 : v - 1));
  return g;
}

Graph b_ns(int n, int s) {
  require(n >= 4, "b_ns needs n >= 4");
  require(s >= 0 && 2 * s <= n - 4, "b_ns needs 0 <= s <= (n-4)/2");
  Graph g = k4_minus();
  int long_len = n - s - 4;
  for (int k = 0; k < long_len; ++k) g = g.with_vertex(1ULL << (k == 0 ? 2 : g.n() - 1));
  for (int k = 0; k < s; ++k) g = g.with_vertex(1ULL << (k == 0 ? 3 : g.n() - 1));
  return g;
}

Graph dumbbell(int n, int p, int q) {
  require(p >= 3 && q >= 3, "dumbbell cycles need length >= 3");
  require(p + q <= n, "dumbbell needs p + q <= n");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < p; ++i) es.emplace_back(i, (i + 1) % p);
  for (int i = 0; i < q; ++i) es.emplace_back(p + i, p + (i + 1) % q);
  int prev = 0;
  for (int v = p + q; v < n; ++v) {
    es.emplace_back(prev, v);
    prev = v;
  }
  es.emplace_back(prev, p);
  return Graph::from_edges(n, es);
}

Graph theta(int k, int l, int t) {
  require(1 <= k && k <= l && l <= t, "theta needs 1 <= k <= l <= t");
  require(l >= 2, "theta needs l >= 2 (no multi-edges)");
  const int n = k + l + t - 1;
  std::vector<std::pair<int, int>> es;
  int next = 2;
  for (int len : {k, l, t}) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, 1);
  }
  return Graph::from_edges(n, es);
}

Graph a_nk(int n, int k, int i) {
  require(k >= 2, "a_nk needs k >= 2");
  require(n - k >= 1, "a_nk needs a long leg of length >= 1");
  require(i >= 0 && 2 * i <= (k - 1) * (k - 2), "a_nk needs 0 <= i <= C(k-1,2)");
  std::vector<int> legs{n - k};
  legs.insert(legs.end(), static_cast<std::size_t>(k - 1), 1);
  Graph g = spider(n, legs).tree;
  // unit leaves occupy ids n-k+1 .. n-1; add the first i pairs in lex order
  int added = 0;
  for (int a = n - k + 1; a < n && added < i; ++a)
    for (int b = a + 1; b < n && added < i; ++b) {
      g = g.with_edge(a, b);
      ++added;
    }
  return g;
}

std::int64_t closed_form_w_path(int n) {
  return div_exact(static_cast<std::int64_t>(n - 1) * n * (n + 1), 6, "w_path");
}

std::int64_t closed_form_w_cycle(int n) {
  std::int64_t nn = n;
  return n % 2 == 0 ? div_exact(nn * nn * nn, 8, "w_cycle") : div_exact(nn * (nn * nn - 1), 8, "w_cycle");
}

std::int64_t closed_form_w_star(int n) { return static_cast<std::int64_t>(n - 1) * (n - 1); }

std::int64_t closed_form_w_complete(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

std::int64_t closed_form_w_lollipop_even(int n, int r) {
  require(r % 2 == 0, "closed_form_w_lollipop_even needs even r");
  require(r >= 4 && r < n, "closed_form_w_lollipop_even needs 4 <= r < n");
  std::int64_t N = n, R = r;
  std::int64_t scaled = 4 * N * N * N + (-6 * R * R + 12 * R - 4) * N + (5 * R * R * R - 12 * R * R + 4 * R);
  return div_exact(scaled, 24, "w_lollipop_even");
}

std::int64_t closed_form_w_bns(int n, int s) {
  require(s >= 0 && 2 * s <= n - 4, "closed_form_w_bns needs 0 <= s <= (n-4)/2");
  std::int64_t N = n, S = s;
  return div_exact((N - 2) * (N - 1) * N, 6, "w_bns") + (S + 1) * (S + 2) / 2 +
         (N - S - 3) * (N - S - 2) / 2 + 1;
}

std::int64_t closed_form_sz_bns(int n, int s) {
  require(s >= 0 && 2 * s <= n - 4, "closed_form_sz_bns needs 0 <= s <= (n-4)/2");
  std::int64_t N = n, S = s;
  return div_exact((N - 1) * N * (N + 1), 6, "sz_bns") + N * S - S * S - 4 * S - 1;
}

std::int64_t closed_form_w_b1(int n) {
  std::int64_t N = n;
  return div_exact(N * N * N - 19 * N + 54, 6, "w_b1");
}

std::int64_t closed_form_w_h23(int n) { return closed_form_w_b1(n); }

TheoremBounds theorem_bounds(int n) {
  require(n >= 4, "theorem_bounds needs n >= 4");
  std::int64_t N = n;
  TheoremBounds b;
  b.thm1_1_diff = Rational(4 * N - 8);
  b.thm1_2_diff = Rational(2 * N - 5);
  b.thm1_3_diff = Rational(N * N + 4 * N - 6, 4);
  b.thm1_4_bip = Rational(1) + Rational(24 * (N - 2), N * N * N - 13 * N + 36);
  b.thm1_4_nonbip = Rational(1) + Rational(3 * (N * N + 4 * N - 6), 2 * (N * N * N - 7 * N + 12));
  b.thm1_5_max = n % 2 == 1 ? Rational(2) - Rational(8, N * N + 7) : Rational(2);
  b.thm1_6_max = n % 2 == 1 ? Rational(2) + Rational(2, N * N - 1) : Rational(2);
  b.thm1_7_bip = b.thm1_4_bip;
  b.thm1_7_nonbip = Rational(1) + Rational(6 * (2 * N - 5), N * N * N - 25 * N + 90);
  b.thm2_3_min = Rational(1) + Rational(12, N * N * N - 19 * N + 54);
  b.thm2_4_min = Rational(1) + Rational(24 * (N - 2), N * N * N - 19 * N + 54);
  b.max_w_odd_girth = Rational(N * N * N - 25 * N + 90, 6);
  b.max_w_even_girth = Rational(N * N * N - 37 * N + 168, 6);
  return b;
}

namespace {

const char* kind_name(FamilyId::Kind k) {
  switch (k) {
    case FamilyId::Kind::path: return "path";
    case FamilyId::Kind::cycle: return "cycle";
    case FamilyId::Kind::star: return "star";
    case FamilyId::Kind::complete: return "complete";
    case FamilyId::Kind::k4minus: return "k4minus";
    case FamilyId::Kind::lollipop: return "lollipop";
    case FamilyId::Kind::b1: return "b1";
    case FamilyId::Kind::bns: return "bns";
    case FamilyId::Kind::dumbbell: return "dumbbell";
    case FamilyId::Kind::theta: return "theta";
    case FamilyId::Kind::crpaths: return "crpaths";
    case FamilyId::Kind::crstars: return "crstars";
    case FamilyId::Kind::h: return "h";
    case FamilyId::Kind::spider: return "spider";
    case FamilyId::Kind::ank: return "ank";
  }
  return "?";
}

struct KindSpec {
  FamilyId::Kind kind;
  int nargs;      // scalar parameters expected
  bool has_list;  // trailing comma list
};

const KindSpec kKinds[] = {
    {FamilyId::Kind::path, 1, false},      {FamilyId::Kind::cycle, 1, false},
    {FamilyId::Kind::star, 1, false},      {FamilyId::Kind::complete, 1, false},
    {FamilyId::Kind::k4minus, 0, false},   {FamilyId::Kind::lollipop, 2, false},
    {FamilyId::Kind::b1, 1, false},        {FamilyId::Kind::bns, 2, false},
    {FamilyId::Kind::dumbbell, 3, false},  {FamilyId::Kind::theta, 3, false},
    {FamilyId::Kind::crpaths, 1, true},    {FamilyId::Kind::crstars, 1, true},
    {FamilyId::Kind::h, 2, false},         {FamilyId::Kind::spider, 1, true},
    {FamilyId::Kind::ank, 3, false},
};

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("family id: bad integer '" + s + "'");
  return v;
}

}  // namespace

std::string FamilyId::str() const {
  std::ostringstream out;
  out << kind_name(kind);
  for (int a : args) out << ':' << a;
  if (!list.empty()) {
    out << ':';
    for (std::size_t i = 0; i < list.size(); ++i) out << (i ? "," : "") << list[i];
  }
  return out.str();
}

FamilyId FamilyId::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  for (const KindSpec& ks : kKinds) {
    if (parts[0] != kind_name(ks.kind)) continue;
    FamilyId id;
    id.kind = ks.kind;
    const std::size_t expect = 1 + static_cast<std::size_t>(ks.nargs) + (ks.has_list ? 1 : 0);
    if (parts.size() != expect)
      throw std::invalid_argument("family id '" + text + "': expected " + kind_name(ks.kind) +
                                  " with " + std::to_string(expect - 1) + " field(s)");
    for (int i = 0; i < ks.nargs; ++i) id.args.push_back(parse_int(parts[static_cast<std::size_t>(1 + i)]));
    if (ks.has_list) {
      std::string item;
      std::istringstream in(parts.back());
      while (std::getline(in, item, ',')) id.list.push_back(parse_int(item));
      if (id.list.empty()) throw std::invalid_argument("family id '" + text + "': empty list");
    }
    return id;
  }
  throw std::invalid_argument("family id '" + text + "': unknown family tag");
}

Graph FamilyId::build() const {
  switch (kind) {
    case Kind::path: return path(args[0]);
    case Kind::cycle: return cycle(args[0]);
    case Kind::star: return star(args[0]);
    case Kind::complete: return complete(args[0]);
    case Kind::k4minus: return k4_minus();
    case Kind::lollipop: return lollipop(args[0], args[1]);
    case Kind::b1: return b1(args[0]);
    case Kind::bns: return b_ns(args[0], args[1]);
    case Kind::dumbbell: return dumbbell(args[0], args[1], args[2]);
    case Kind::theta: return theta(args[0], args[1], args[2]);
    case Kind::crpaths: return cr_paths(args[0], list);
    case Kind::crstars: return cr_stars(args[0], list);
    case Kind::h: return h_graph(args[0], args[1]);
    case Kind::spider: return spider(args[0], list).tree;
    case Kind::ank: return a_nk(args[0], args[1], args[2]);
  }
  throw std::logic_error("unreachable");
}

std::vector<FamilyId> family_candidates(int n) {
  std::vector<FamilyId> out;
  auto add = [&out](FamilyId::Kind k, std::vector<int> args, std::vector<int> list = {}) {
    out.push_back(FamilyId{k, std::move(args), std::move(list)});
  };
  add(FamilyId::Kind::path, {n});
  if (n >= 3) add(FamilyId::Kind::cycle, {n});
  if (n >= 4) add(FamilyId::Kind::star, {n});
  if (n >= 4) add(FamilyId::Kind::complete, {n});
  if (n == 4) add(FamilyId::Kind::k4minus, {});
  if (n >= 8)
    for (int k = 0; k <= 3; ++k) add(FamilyId::Kind::h, {n, k});
  if (n >= 5) add(FamilyId::Kind::b1, {n});
  for (int s = 0; 2 * s <= n - 4; ++s) add(FamilyId::Kind::bns, {n, s});
  for (int p = 3; p <= n; ++p)
    for (int q = p; p + q <= n; ++q) add(FamilyId::Kind::dumbbell, {n, p, q});
  for (int k = 1; 3 * k <= n + 1; ++k)
    for (int l = std::max(k, 2); k + 2 * l <= n + 1; ++l) add(FamilyId::Kind::theta, {k, l, n + 1 - k - l});
  // cycles with rooted paths: 2 or 3 nontrivial tails cover every named case
  for (int r = 3; r < n; ++r) {
    const int extra = n - r;
    for (int nontrivial = 2; nontrivial <= 3; ++nontrivial) {
      if (nontrivial > r || extra < nontrivial) continue;
      std::vector<int> pos(static_cast<std::size_t>(nontrivial));
      // choose positions, then compositions of `extra` into that many parts
      std::function<void(int, int)> choose = [&](int start, int k) {
        if (k == nontrivial) {
          std::vector<int> part(static_cast<std::size_t>(nontrivial), 1);
          std::function<void(int, int)> comp = [&](int idx, int left) {
            if (idx == nontrivial - 1) {
              part[static_cast<std::size_t>(idx)] = left;
              std::vector<int> sizes(static_cast<std::size_t>(r), 0);
              for (int t = 0; t < nontrivial; ++t)
                sizes[static_cast<std::size_t>(pos[static_cast<std::size_t>(t)])] = part[static_cast<std::size_t>(t)];
              out.push_back(FamilyId{FamilyId::Kind::crpaths, {r}, sizes});
              out.push_back(FamilyId{FamilyId::Kind::crstars, {r}, sizes});
              return;
            }
            for (int v = 1; left - v >= nontrivial - 1 - idx; ++v) {
              part[static_cast<std::size_t>(idx)] = v;
              comp(idx + 1, left - v);
            }
          };
          comp(0, extra);
          return;
        }
        for (int p = start; p < r; ++p) {
          pos[static_cast<std::size_t>(k)] = p;
          choose(p + 1, k + 1);
        }
      };
      choose(0, 0);
    }
  }
  for (int r = 3; r < n; ++r) add(FamilyId::Kind::lollipop, {n, r});
  // spiders: partitions of n-1 into >= 3 legs with a leg of length >= 2
  {
    std::vector<int> part;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
      if (left == 0) {
        if (part.size() >= 3 && part[0] >= 2) add(FamilyId::Kind::spider, {n}, part);
        return;
      }
      for (int v = std::min(left, maxpart); v >= 1; --v) {
        part.push_back(v);
        rec(left - v, v);
        part.pop_back();
      }
    };
    rec(n - 1, n - 1);
  }
  for (int k = 3; k <= 5 && n - k >= 2; ++k)
    for (int i = 1; 2 * i <= (k - 1) * (k - 2); ++i) add(FamilyId::Kind::ank, {n, k, i});
  return out;
}

}  // namespace szw
