#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dgi/digraph.hpp"
#include "dgi/error.hpp"
#include "dgi/fixtures.hpp"

namespace dgi::test {

// Runs fn, which must throw a dgi::Error, and returns its code.
template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected the operation to throw dgi::Error");
}

inline std::vector<Arc> sorted_arcs(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

inline std::vector<VertexId> sorted_vertices(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

inline std::set<std::pair<VertexId, VertexId>> arc_pairs(
    const std::vector<Arc>& arcs) {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Arc& a : arcs) pairs.insert({a.tail, a.head});
  return pairs;
}

inline const Digraph& fix(FixtureId id) { return fixture(id).digraph; }

}  // namespace dgi::test
