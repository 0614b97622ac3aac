#pragma once

#include <string>
#include <string_view>

#include "szw/graph.hpp"

namespace szw {

// One-line graph6 text for graphs of order <= 62 (single-byte header form).
// Bit-exact per the published format: header byte n+63, then the upper
// triangle in column-major order, packed into 6-bit groups biased by 63.
std::string emit_graph6(const Graph& g);

// Rejects malformed headers, out-of-range characters, wrong line length and
// nonzero padding bits.
Graph parse_graph6(std::string_view line);

}  // namespace szw
