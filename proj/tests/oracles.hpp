// Test-only oracles, kept independent of the library's computation paths:
// Floyd-Warshall distances instead of BFS, backtracking isomorphism instead
// of canonical keys, and counting recurrences instead of generation.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "szw/graph.hpp"

namespace szw::oracle {

// W via Floyd-Warshall on a plain int matrix.
std::int64_t wiener(const Graph& g);

// Transmission of v via Floyd-Warshall.
std::int64_t transmission(const Graph& g, int v);

// Backtracking isomorphism test with degree pruning.
bool isomorphic(const Graph& a, const Graph& b);

// Free-tree count by the rooted-tree recurrence plus the dissimilarity
// correction; exact for n <= 32.
std::int64_t free_tree_count(int n);

// Every labeled tree on n vertices (decoded Prufer sequences).
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit);

// Every labeled graph on n vertices with exactly m edges.
void for_each_labeled_graph(int n, int m, const std::function<void(const Graph&)>& visit);

// Isomorphism classes among the visited graphs, deduplicated with the
// backtracking test behind an invariant fingerprint.
class IsoClassCollector {
 public:
  // returns true when g was new
  bool add(const Graph& g);
  std::size_t size() const { return count_; }

 private:
  struct Bucket {
    std::vector<Graph> reps;
  };
  std::map<std::string, Bucket> buckets_;
  std::size_t count_ = 0;
};

}  // namespace szw::oracle
