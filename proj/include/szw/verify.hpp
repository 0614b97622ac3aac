#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szw/enumerate.hpp"
#include "szw/families.hpp"
#include "szw/invariants.hpp"

namespace szw {

// Matches g against the named families of its order; most specific first.
std::optional<FamilyId> identify(const Graph& g);

struct RankingEntry {
  CanonicalKey key;
  std::string g6;
  std::optional<FamilyId> family;
};

// Graphs grouped by equal W; tiers ordered by descending W, members by key.
struct RankingTier {
  std::int64_t w = 0;
  std::vector<RankingEntry> members;
};

struct RankingReport {
  ClassSpec spec;
  std::vector<RankingTier> tiers;
};

struct RatioReport {
  ClassSpec spec;
  bool minimize = true;
  Rational extreme;
  std::vector<std::string> attainers;  // graph6, sorted
  Rational bound;
  bool bound_matched = false;
};

struct TheoremResult {
  std::string id;
  int n = 0;
  bool pass = false;
  std::vector<std::string> witnesses;  // counterexamples: graph6 plus the violated relation
  std::int64_t ms = 0;
};

// All-tiers (top_k <= 0) or top-k ranking of a class, with identification.
RankingReport rank_class(const ClassSpec& spec, int top_k, const EnumLimits& lim = {});

// Unicyclic W-ranking tiers 1..7 for n >= 10, including the stated ties.
TheoremResult check_thm_2_1(int n, RankingReport* report = nullptr, const EnumLimits& lim = {});

// Bicyclic top-4 chain for n >= 6, plus the n=6 residual multiset.
TheoremResult check_thm_2_2(int n, RankingReport* report = nullptr, const EnumLimits& lim = {});

// Minimum Sz/W over connected graphs with a non-complete block.
TheoremResult check_thm_2_3(int n, RatioReport* report = nullptr, const EnumLimits& lim = {});

// Second-smallest Sz*/W over cyclic graphs. Restricted mode sweeps
// unicyclic + bicyclic; full mode sweeps every connected cyclic graph and
// needs the enumeration override at n = 10.
TheoremResult check_thm_2_4(int n, bool restricted = true, RatioReport* report = nullptr,
                            const EnumLimits& lim = {});

// Difference floors (x = 1..3) and quotient extremes (x = 4..7). Full cyclic
// classes are swept for n <= 8; above that the cyclic checks restrict to
// unicyclic + bicyclic.
TheoremResult check_thm_1_x(int x, int n, const EnumLimits& lim = {});

// Tree W-ranking: top tiers and the unique unnamed tree wedged into the
// chain for n >= 8 (its key is reported through gpp_key).
TheoremResult check_tree_orderings(int n, CanonicalKey* gpp_key = nullptr);

// Property suites for the structural lemmas: coalescence formula, pendant
// corollary, transmission bound, path-shift improvement, cycle-vs-lollipop
// coalescence, girth-restricted W maxima, and the girth-3 difference floor.
TheoremResult check_inequality_lemmas(std::uint64_t seed, int trials, const EnumLimits& lim = {});

}  // namespace szw
