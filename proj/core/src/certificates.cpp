#include "dgi/certificates.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dgi/connectivity.hpp"

namespace dgi {

namespace {

bool fail(std::string* why, const std::string& reason) {
  if (why) *why = reason;
  return false;
}

bool adjacent(const Digraph& g, const VertexId& a, const VertexId& b) {
  return g.has_arc(a, b) || g.has_arc(b, a);
}

}  // namespace

std::vector<Arc> Arborescence::arcs() const {
  std::vector<Arc> result;
  result.reserve(parents.size());
  for (const auto& [child, parent] : parents) {
    result.push_back({parent, child});
  }
  return result;
}

bool check_matching(const Digraph& g, const MatchingCertificate& c,
                    std::string* why) {
  std::set<VertexId> covered;
  for (const Arc& a : c.arcs) {
    if (!g.has_arc(a.tail, a.head)) {
      return fail(why, "matching uses arc " + to_string(a) + " not in the graph");
    }
    if (!covered.insert(a.tail).second) {
      return fail(why, "vertex '" + a.tail + "' covered twice");
    }
    if (!covered.insert(a.head).second) {
      return fail(why, "vertex '" + a.head + "' covered twice");
    }
  }
  bool covers_all = covered.size() == g.vertex_count();
  if (c.is_perfect != covers_all) {
    return fail(why, c.is_perfect ? "declared perfect but leaves vertices uncovered"
                                  : "covers every vertex but not declared perfect");
  }
  return true;
}

bool check_independent_set(const Digraph& g, const IndependentSetCertificate& c,
                           std::string* why) {
  std::set<VertexId> members;
  for (const VertexId& v : c.vertices) {
    if (!g.has_vertex(v)) return fail(why, "unknown vertex '" + v + "'");
    if (!members.insert(v).second) return fail(why, "vertex '" + v + "' repeated");
  }
  for (const VertexId& a : c.vertices) {
    for (const VertexId& b : c.vertices) {
      if (a < b && adjacent(g, a, b)) {
        return fail(why, "members '" + a + "' and '" + b + "' are adjacent");
      }
    }
  }
  return true;
}

bool check_coloring(const Digraph& g, const ColoringCertificate& c,
                    std::string* why) {
  std::set<VertexId> assigned;
  for (const auto& color_class : c.classes) {
    if (color_class.empty()) return fail(why, "empty color class");
    for (const VertexId& v : color_class) {
      if (!g.has_vertex(v)) return fail(why, "unknown vertex '" + v + "'");
      if (!assigned.insert(v).second) {
        return fail(why, "vertex '" + v + "' colored twice");
      }
    }
    for (const VertexId& a : color_class) {
      for (const VertexId& b : color_class) {
        if (a < b && adjacent(g, a, b)) {
          return fail(why, "same-class vertices '" + a + "' and '" + b +
                               "' are adjacent");
        }
      }
    }
  }
  if (assigned.size() != g.vertex_count()) {
    return fail(why, "coloring does not cover every vertex");
  }
  return true;
}

bool check_dominating_set(const Digraph& g, const DominatingSetCertificate& c,
                          std::string* why) {
  std::set<VertexId> members;
  for (const VertexId& v : c.vertices) {
    if (!g.has_vertex(v)) return fail(why, "unknown vertex '" + v + "'");
    members.insert(v);
  }
  for (const VertexId& v : g.vertices()) {
    if (members.contains(v)) continue;
    bool dominated = false;
    for (const VertexId& u : g.in_neighbors(v)) {
      if (members.contains(u)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      return fail(why, "vertex '" + v + "' has no in-neighbor in the set");
    }
  }
  return true;
}

bool check_integrity(const Digraph& g, const IntegrityCertificate& c,
                     std::string* why) {
  Digraph reduced;
  if (c.kind == IntegrityKind::kVertex) {
    if (!c.removed_arcs.empty()) {
      return fail(why, "vertex certificate lists removed arcs");
    }
    std::set<VertexId> unique(c.removed_vertices.begin(), c.removed_vertices.end());
    if (unique.size() != c.removed_vertices.size()) {
      return fail(why, "removed vertex listed twice");
    }
    for (const VertexId& v : c.removed_vertices) {
      if (!g.has_vertex(v)) return fail(why, "unknown vertex '" + v + "'");
    }
    reduced = delete_vertices(g, c.removed_vertices);
  } else {
    if (!c.removed_vertices.empty()) {
      return fail(why, "arc certificate lists removed vertices");
    }
    std::set<Arc> unique(c.removed_arcs.begin(), c.removed_arcs.end());
    if (unique.size() != c.removed_arcs.size()) {
      return fail(why, "removed arc listed twice");
    }
    for (const Arc& a : c.removed_arcs) {
      if (!g.has_arc(a.tail, a.head)) {
        return fail(why, "unknown arc " + to_string(a));
      }
    }
    reduced = delete_arcs(g, c.removed_arcs);
  }
  std::size_t m = strong_components(reduced).max_component_order();
  if (m != c.strong_component_max) {
    return fail(why, "largest strong component has " + std::to_string(m) +
                         " vertices, certificate says " +
                         std::to_string(c.strong_component_max));
  }
  if (c.value != c.removal_size() + m) {
    return fail(why, "value does not equal removal size plus component order");
  }
  return true;
}

bool check_arborescence(const Digraph& g, const Arborescence& a,
                        std::string* why) {
  if (!g.has_vertex(a.root)) {
    return fail(why, "unknown root '" + a.root + "'");
  }
  std::map<VertexId, VertexId> parent;
  for (const auto& [child, p] : a.parents) {
    if (child == a.root) return fail(why, "root '" + a.root + "' has a parent");
    if (!g.has_arc(p, child)) {
      return fail(why, "tree arc " + to_string({p, child}) + " not in the graph");
    }
    if (!parent.emplace(child, p).second) {
      return fail(why, "vertex '" + child + "' has two parents");
    }
  }
  if (parent.size() + 1 != g.vertex_count()) {
    return fail(why, "parent map does not cover every non-root vertex");
  }
  for (const VertexId& v : g.vertices()) {
    if (v != a.root && !parent.contains(v)) {
      return fail(why, "vertex '" + v + "' has no parent");
    }
  }
  // Following parents must reach the root without revisiting anything.
  for (const auto& [child, unused] : a.parents) {
    std::set<VertexId> seen{child};
    VertexId v = child;
    while (v != a.root) {
      v = parent.at(v);
      if (!seen.insert(v).second) {
        return fail(why, "parent chain from '" + child + "' loops");
      }
    }
  }
  return true;
}

}  // namespace dgi
