#include "dgi/walk.hpp"

#include <algorithm>
#include <set>

namespace dgi {

std::vector<Arc> Walk::arcs() const {
  std::vector<Arc> result;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    result.push_back({vertices_[i], vertices_[i + 1]});
  }
  return result;
}

bool Walk::is_path() const {
  std::set<VertexId> seen(vertices_.begin(), vertices_.end());
  return seen.size() == vertices_.size();
}

void validate_walk(const Digraph& g, const Walk& walk) {
  const auto& vs = walk.vertices();
  if (vs.empty()) {
    throw Error(ErrorCode::kNotAWalk, "a walk needs at least one vertex");
  }
  for (const VertexId& v : vs) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::kNotAWalk, "walk visits unknown vertex '" + v + "'");
    }
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_arc(vs[i], vs[i + 1])) {
      throw Error(ErrorCode::kNotAWalk,
                  "consecutive pair " + to_string({vs[i], vs[i + 1]}) +
                      " is not an arc");
    }
  }
}

Walk walk_to_path(const Digraph& g, const Walk& walk) {
  validate_walk(g, walk);
  const auto& vs = walk.vertices();
  if (vs.front() == vs.back()) {
    throw Error(ErrorCode::kClosedWalkInput,
                "walk is closed at '" + vs.front() +
                    "'; use closed_walk_to_cycle instead");
  }
  // Keep a stack of the path built so far. Revisiting a stacked vertex means
  // the walk made a detour that returned; drop the detour and continue from
  // the earlier visit. Every consecutive pair of the result was consecutive
  // somewhere on the walk, so the arc set stays inside the walk's arcs.
  std::vector<VertexId> stack{vs.front()};
  for (std::size_t i = 1; i < vs.size(); ++i) {
    auto pos = std::find(stack.begin(), stack.end(), vs[i]);
    if (pos == stack.end()) {
      stack.push_back(vs[i]);
    } else {
      stack.erase(pos + 1, stack.end());
    }
  }
  return Walk(std::move(stack));
}

Walk closed_walk_to_cycle(const Digraph& g, const Walk& walk) {
  validate_walk(g, walk);
  if (!walk.is_closed()) {
    throw Error(ErrorCode::kNotClosed,
                "walk from '" + walk.first() + "' to '" + walk.last() +
                    "' is not closed");
  }
  // Same stack idea, but stop at the first moment the start vertex closes a
  // loop of length >= 2: the stack then holds pairwise distinct vertices, so
  // appending the start yields a cycle through it.
  const auto& vs = walk.vertices();
  std::vector<VertexId> stack{vs.front()};
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i] == vs.front()) {
      if (stack.size() >= 2) {
        stack.push_back(vs.front());
        return Walk(std::move(stack));
      }
      continue;  // immediate re-visit can only come from a loop arc; skip
    }
    auto pos = std::find(stack.begin(), stack.end(), vs[i]);
    if (pos == stack.end()) {
      stack.push_back(vs[i]);
    } else {
      stack.erase(pos + 1, stack.end());
    }
  }
  throw Error(ErrorCode::kNoCycleExtractable,
              "closed walk of length " + std::to_string(walk.length()) +
                  " contains no cycle through '" + vs.front() + "'");
}

}  // namespace dgi
