#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szw/rational.hpp"

namespace szw {

struct ReportRecord {
  std::string id;
  int n = 0;
  bool pass = false;
  std::optional<Rational> bound;       // the theorem's closed-form bound, when one exists
  std::vector<std::string> attainers;  // graph6 of the extremal graphs
  std::vector<std::string> witnesses;  // counterexample lines, only on failure
  std::int64_t ms = 0;
};

// Line-oriented run report, schema-versioned. Byte-stable for identical
// inputs: wall-clock fields are only emitted with include_timings, which the
// CLI exposes as --timings.
struct ReportDocument {
  static constexpr int kSchema = 1;
  std::string command;
  std::uint64_t seed = 0;
  std::string guards;
  bool include_timings = false;
  std::vector<ReportRecord> records;

  std::string to_text() const;
  bool all_pass() const;
};

}  // namespace szw
