#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szw/canonical.hpp"
#include "szw/graph.hpp"

namespace szw {

// Resource guard violation: the requested order needs the explicit override.
struct guard_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EnumLimits {
  int connected_max_n = 9;
  bool override_guard = false;  // unlocks connected n=10, unicyclic 14, bicyclic 13
  int threads = 0;              // 0 = all cores
};

// A graph class plus conjunctive filters, as used by the theorem checkers.
struct ClassSpec {
  enum class GraphClass { trees, unicyclic, bicyclic, connected, cyclic };
  GraphClass cls = GraphClass::connected;
  int n = 0;
  std::optional<int> girth_min;
  std::optional<int> girth_max;
  std::optional<bool> bipartite;
  std::optional<bool> has_odd_cycle;
  std::optional<bool> non_complete_block;
};

std::string class_name(ClassSpec::GraphClass cls);
std::optional<ClassSpec::GraphClass> class_from_name(const std::string& name);

// One representative per isomorphism class, relabeled to canonical form and
// sorted by canonical key; two runs emit identical sequences.
std::vector<Graph> gen_trees(int n);
std::vector<Graph> gen_unicyclic(int n, const EnumLimits& lim = {});
std::vector<Graph> gen_bicyclic(int n, const EnumLimits& lim = {});
std::vector<Graph> gen_connected(int n, const EnumLimits& lim = {});

bool class_matches(const ClassSpec& spec, const Graph& g);
std::vector<Graph> generate(const ClassSpec& spec, const EnumLimits& lim = {});

// Per-process memoized corpora; repeated checks share one enumeration.
const std::vector<Graph>& cached_class(ClassSpec::GraphClass cls, int n, const EnumLimits& lim = {});

}  // namespace szw
