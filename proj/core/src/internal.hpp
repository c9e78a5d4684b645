#pragma once

// Index-based adapter shared by the algorithm translation units. Not part of
// the installed interface; the public API speaks labels only.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgi/digraph.hpp"
#include "dgi/error.hpp"

namespace dgi::internal {

struct IndexedGraph {
  explicit IndexedGraph(const Digraph& g);

  const Digraph* graph;
  std::unordered_map<VertexId, int> index;
  std::vector<std::vector<int>> out;  // arc-insertion order
  std::vector<std::vector<int>> in;
  std::vector<int> by_label;  // vertex indices sorted lexicographically

  int n() const { return static_cast<int>(out.size()); }
  const VertexId& label(int i) const { return graph->vertices()[i]; }
  int at(const VertexId& v) const;

  std::vector<VertexId> labels(const std::vector<int>& ids) const;
};

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const IndexedGraph& g, int source);

}  // namespace dgi::internal
