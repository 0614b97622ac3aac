#include "szw/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "szw/structure.hpp"

namespace szw {

namespace {

int thread_count(const EnumLimits& lim) {
  if (lim.threads > 0) return lim.threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

struct KeyedGraph {
  CanonicalKey key;
  Graph g;
};

// Expands every parent into candidate children, keeps one canonical
// representative per isomorphism class. Parallel over parents; the final
// sort by key makes the output order schedule-independent.
template <typename Expand>
std::vector<Graph> dedupe_expand(const std::vector<Graph>& parents, int threads, Expand expand) {
  std::mutex mu;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  std::vector<KeyedGraph> reps;
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    std::vector<KeyedGraph> local;
    auto flush = [&]() {
      std::lock_guard<std::mutex> lock(mu);
      for (auto& kg : local) {
        if (seen.insert(kg.key).second) reps.push_back(std::move(kg));
      }
      local.clear();
    };
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= parents.size()) break;
      expand(parents[i], [&](const Graph& child) {
        Graph canon = canonical_form(child);
        local.push_back({canonical_key(canon), std::move(canon)});
        if (local.size() >= 512) flush();
      });
    }
    flush();
  };

  if (threads <= 1 || parents.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(reps.begin(), reps.end(), [](const KeyedGraph& a, const KeyedGraph& b) { return a.key < b.key; });
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& kg : reps) out.push_back(std::move(kg.g));
  return out;
}

// Parent of preorder vertex i in a level sequence is the nearest previous
// vertex one level up.
Graph tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<std::pair<int, int>> es;
  std::array<int, kMaxVertices + 1> last{};
  last[1] = 0;
  for (int i = 1; i < n; ++i) {
    es.emplace_back(last[static_cast<std::size_t>(levels[static_cast<std::size_t>(i)] - 1)], i);
    last[static_cast<std::size_t>(levels[static_cast<std::size_t>(i)])] = i;
  }
  return Graph::from_edges(n, es);
}

// Is the root (preorder vertex 0) a centroid? Every free tree is rooted at a
// centroid in at least one generated sequence, so non-centroid roots can be
// skipped before the canonical dedupe.
bool root_is_centroid(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::array<int, kMaxVertices + 1> last{};
  last[1] = 0;
  for (int i = 1; i < n; ++i) {
    parent[static_cast<std::size_t>(i)] = last[static_cast<std::size_t>(levels[static_cast<std::size_t>(i)] - 1)];
    last[static_cast<std::size_t>(levels[static_cast<std::size_t>(i)])] = i;
  }
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (int i = n - 1; i >= 1; --i) size[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])] += size[static_cast<std::size_t>(i)];
  for (int i = 1; i < n; ++i)
    if (parent[static_cast<std::size_t>(i)] == 0 && 2 * size[static_cast<std::size_t>(i)] > n) return false;
  return true;
}

}  // namespace

std::string class_name(ClassSpec::GraphClass cls) {
  switch (cls) {
    case ClassSpec::GraphClass::trees: return "trees";
    case ClassSpec::GraphClass::unicyclic: return "unicyclic";
    case ClassSpec::GraphClass::bicyclic: return "bicyclic";
    case ClassSpec::GraphClass::connected: return "connected";
    case ClassSpec::GraphClass::cyclic: return "cyclic";
  }
  return "?";
}

std::optional<ClassSpec::GraphClass> class_from_name(const std::string& name) {
  for (auto cls : {ClassSpec::GraphClass::trees, ClassSpec::GraphClass::unicyclic,
                   ClassSpec::GraphClass::bicyclic, ClassSpec::GraphClass::connected,
                   ClassSpec::GraphClass::cyclic}) {
    if (class_name(cls) == name) return cls;
  }
  return std::nullopt;
}

std::vector<Graph> gen_trees(int n) {
  if (n < 1 || n > 16) throw guard_error("gen_trees supports 1 <= n <= 16");
  if (n == 1) return {Graph::empty(1)};
  if (n == 2) return {Graph::from_edges(2, {{0, 1}})};

  // Beyer-Hedetniemi: every canonical rooted level sequence, path to star.
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  std::vector<KeyedGraph> reps;
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  for (;;) {
    if (root_is_centroid(s)) {
      Graph canon = canonical_form(tree_from_levels(s));
      CanonicalKey key = canonical_key(canon);
      if (seen.insert(key).second) reps.push_back({std::move(key), std::move(canon)});
    }
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (s[static_cast<std::size_t>(i)] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(p)] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - (p - q))];
  }
  std::sort(reps.begin(), reps.end(), [](const KeyedGraph& a, const KeyedGraph& b) { return a.key < b.key; });
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& kg : reps) out.push_back(std::move(kg.g));
  return out;
}

std::vector<Graph> gen_unicyclic(int n, const EnumLimits& lim) {
  if (n < 3) throw std::invalid_argument("gen_unicyclic needs n >= 3");
  if (n > (lim.override_guard ? 14 : 12))
    throw guard_error("gen_unicyclic guarded at n <= 12 (14 with override)");
  return dedupe_expand(cached_class(ClassSpec::GraphClass::trees, n, lim), thread_count(lim),
                       [](const Graph& t, auto emit) {
                         for (int u = 0; u < t.n(); ++u)
                           for (int v = u + 1; v < t.n(); ++v)
                             if (!t.has_edge(u, v)) emit(t.with_edge(u, v));
                       });
}

std::vector<Graph> gen_bicyclic(int n, const EnumLimits& lim) {
  if (n < 4) throw std::invalid_argument("gen_bicyclic needs n >= 4");
  if (n > (lim.override_guard ? 13 : 12))
    throw guard_error("gen_bicyclic guarded at n <= 12 (13 with override)");
  return dedupe_expand(cached_class(ClassSpec::GraphClass::unicyclic, n, lim), thread_count(lim),
                       [](const Graph& t, auto emit) {
                         for (int u = 0; u < t.n(); ++u)
                           for (int v = u + 1; v < t.n(); ++v)
                             if (!t.has_edge(u, v)) emit(t.with_edge(u, v));
                       });
}

std::vector<Graph> gen_connected(int n, const EnumLimits& lim) {
  if (n < 1) throw std::invalid_argument("gen_connected needs n >= 1");
  const int guard = lim.override_guard ? std::max(lim.connected_max_n, 10) : lim.connected_max_n;
  if (n > guard)
    throw guard_error("gen_connected guarded at n <= " + std::to_string(guard) +
                      " (pass the override for n = 10)");
  if (n == 1) return {Graph::empty(1)};
  // every connected graph keeps a connected core after deleting some
  // non-cut vertex, so augmenting the (n-1)-corpus by one vertex joined to
  // every nonempty subset reaches every class
  const std::vector<Graph>& smaller = cached_class(ClassSpec::GraphClass::connected, n - 1, lim);
  return dedupe_expand(smaller, thread_count(lim), [](const Graph& p, auto emit) {
    const std::uint64_t subsets = 1ULL << p.n();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) emit(p.with_vertex(mask));
  });
}

bool class_matches(const ClassSpec& spec, const Graph& g) {
  if (g.n() != spec.n || !g.is_connected()) return false;
  switch (spec.cls) {
    case ClassSpec::GraphClass::trees:
      if (g.m() != g.n() - 1) return false;
      break;
    case ClassSpec::GraphClass::unicyclic:
      if (g.m() != g.n()) return false;
      break;
    case ClassSpec::GraphClass::bicyclic:
      if (g.m() != g.n() + 1) return false;
      break;
    case ClassSpec::GraphClass::connected:
      break;
    case ClassSpec::GraphClass::cyclic:
      if (g.m() < g.n()) return false;
      break;
  }
  if (spec.girth_min || spec.girth_max) {
    std::optional<int> gr = girth(g);
    if (spec.girth_min && (!gr || *gr < *spec.girth_min)) return false;
    if (spec.girth_max && (!gr || *gr > *spec.girth_max)) return false;
  }
  if (spec.bipartite && is_bipartite(g) != *spec.bipartite) return false;
  if (spec.has_odd_cycle && is_bipartite(g) == *spec.has_odd_cycle) return false;
  if (spec.non_complete_block && all_blocks_complete(g) == *spec.non_complete_block) return false;
  return true;
}

std::vector<Graph> generate(const ClassSpec& spec, const EnumLimits& lim) {
  const std::vector<Graph>& base =
      cached_class(spec.cls == ClassSpec::GraphClass::cyclic ? ClassSpec::GraphClass::connected : spec.cls,
                   spec.n, lim);
  std::vector<Graph> out;
  for (const Graph& g : base)
    if (class_matches(spec, g)) out.push_back(g);
  return out;
}

const std::vector<Graph>& cached_class(ClassSpec::GraphClass cls, int n, const EnumLimits& lim) {
  if (cls == ClassSpec::GraphClass::cyclic) cls = ClassSpec::GraphClass::connected;
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Graph>>> memo;
  const std::pair<int, int> key{static_cast<int>(cls), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  std::vector<Graph> computed;
  switch (cls) {
    case ClassSpec::GraphClass::trees: computed = gen_trees(n); break;
    case ClassSpec::GraphClass::unicyclic: computed = gen_unicyclic(n, lim); break;
    case ClassSpec::GraphClass::bicyclic: computed = gen_bicyclic(n, lim); break;
    case ClassSpec::GraphClass::connected:
    case ClassSpec::GraphClass::cyclic: computed = gen_connected(n, lim); break;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = memo.try_emplace(key, nullptr);
  if (inserted) it->second = std::make_unique<std::vector<Graph>>(std::move(computed));
  return *it->second;
}

}  // namespace szw
