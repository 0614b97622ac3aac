#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "szw/graph.hpp"

namespace szw {

// Biconnected components as vertex sets plus the cut vertices. Every edge
// lies in exactly one block; two blocks share at most one vertex.
struct BlockDecomposition {
  std::vector<std::uint64_t> blocks;  // vertex set of each block, as a mask
  std::uint64_t cut_vertices = 0;
};

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Standard DFS low-point decomposition. Rejects disconnected input.
BlockDecomposition blocks(const Graph& g);

// True iff every block induces a clique.
bool all_blocks_complete(const Graph& g);

bool is_bipartite(const Graph& g);

// m - n + 1 for a connected graph: 0 tree, 1 unicyclic, 2 bicyclic.
int cyclomatic_number(const Graph& g);

// Vertex-identified union: g2's vertex v2 lands on g1's v1, the rest of g2
// follows after g1's vertices in increasing original id order.
Graph coalesce(const Graph& g1, int v1, const Graph& g2, int v2);

}  // namespace szw
