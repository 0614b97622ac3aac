#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "szw/graph.hpp"

namespace szw {

// Label-invariant byte string: one byte of order followed by the packed
// upper-triangle adjacency bits under the canonical vertex order. Equal keys
// certify isomorphism in both directions (checked against brute-force
// permutation isomorphism in the test suite).
struct CanonicalKey {
  std::string bytes;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

// Canonical vertex order, as position -> vertex. Individualization-refinement
// search minimizing the adjacency encoding; invariant under relabeling.
std::vector<int> canonical_order(const Graph& g);

CanonicalKey canonical_key(const Graph& g);

// The graph relabeled into its canonical order.
Graph canonical_form(const Graph& g);

}  // namespace szw
