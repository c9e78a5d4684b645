#pragma once

#include <cstdint>
#include <vector>

#include "dgi/certificates.hpp"
#include "dgi/digraph.hpp"

namespace dgi {

// Directed spanning trees, read as out-arborescences: one root, every other
// vertex reached along a unique parent path.

// All vertices from which the whole graph is reachable, in insertion order.
std::vector<VertexId> arborescence_roots(const Digraph& g);

// Shortest-path tree from `root`: the parent of v is its lexicographically
// least in-neighbor one BFS layer closer to the root. Deterministic, and the
// tree depth equals the root's eccentricity. NoArborescence when some vertex
// is unreachable.
Arborescence extract_arborescence(const Digraph& g, const VertexId& root);

// Exact number of spanning arborescences rooted at `root` (0 when none), by
// backtracking over parent choices with cycle pruning. Intended for
// enumeration-scale graphs; counts above 2^64 are out of scope.
std::uint64_t count_arborescences(const Digraph& g, const VertexId& root);

}  // namespace dgi
