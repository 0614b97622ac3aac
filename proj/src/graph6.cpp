#include "szw/graph6.hpp"

#include <vector>

namespace szw {

std::string emit_graph6(const Graph& g) {
  if (g.n() > 62) throw std::invalid_argument("graph6: order above 62 not supported");
  std::string out;
  out.push_back(static_cast<char>(g.n() + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  const int h = static_cast<unsigned char>(line[0]);
  if (h == 126) throw std::invalid_argument("graph6: multi-byte order header not supported");
  if (h < 63 || h > 125) throw std::invalid_argument("graph6: malformed header byte");
  const int n = h - 63;
  if (n == 0) throw std::invalid_argument("graph6: empty graph not supported");
  const int nbits = n * (n - 1) / 2;
  const std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() != expect)
    throw std::invalid_argument(line.size() > expect ? "graph6: overlong line" : "graph6: truncated line");
  std::vector<std::pair<int, int>> edges;
  int bit = 0, i = 0, j = 1;
  for (std::size_t p = 1; p < line.size(); ++p) {
    const int c = static_cast<unsigned char>(line[p]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    const int group = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const int b = (group >> k) & 1;
      if (bit >= nbits) {
        if (b) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (b) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace szw
