#pragma once

#include <cstddef>
#include <vector>

#include "dgi/digraph.hpp"

namespace dgi {

// A walk is stored as its vertex sequence; in a simple digraph the arc
// sequence is implied by consecutive pairs, so storing it separately would
// only duplicate state. Length counts arcs, not vertices.
class Walk {
 public:
  Walk() = default;
  explicit Walk(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::vector<Arc> arcs() const;

  std::size_t length() const {
    return vertices_.empty() ? 0 : vertices_.size() - 1;
  }
  bool is_closed() const {
    return length() >= 1 && vertices_.front() == vertices_.back();
  }
  bool is_path() const;  // all vertices pairwise distinct

  const VertexId& first() const { return vertices_.front(); }
  const VertexId& last() const { return vertices_.back(); }

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  std::vector<VertexId> vertices_;
};

// Throws NotAWalk unless every vertex exists in `g` and every consecutive
// pair is an arc of `g`. An empty sequence is not a walk.
void validate_walk(const Digraph& g, const Walk& walk);

// Reduces an open walk to a path with the same endpoints whose arcs all occur
// on the walk. Closed input (first == last) raises ClosedWalkInput.
Walk walk_to_path(const Digraph& g, const Walk& walk);

// Extracts a cycle (closed walk with distinct interior vertices) from a
// closed walk of length >= 2. Open input raises NotClosed; a closed walk too
// short to contain a cycle raises NoCycleExtractable.
Walk closed_walk_to_cycle(const Digraph& g, const Walk& walk);

}  // namespace dgi
