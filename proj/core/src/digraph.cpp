#include "dgi/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dgi {

std::string to_string(const Arc& arc) {
  return "(" + arc.tail + ", " + arc.head + ")";
}

namespace {

void validate_label(const VertexId& v) {
  if (v.empty()) {
    throw Error(ErrorCode::kInvalidLabel, "empty vertex label");
  }
  for (unsigned char c : v) {
    if (std::isspace(c) || !std::isprint(c)) {
      throw Error(ErrorCode::kInvalidLabel,
                  "vertex label contains whitespace or unprintable character: '" +
                      v + "'");
    }
  }
}

}  // namespace

void Digraph::add_vertex(const VertexId& v) {
  validate_label(v);
  if (index_.contains(v)) return;
  index_.emplace(v, vertices_.size());
  vertices_.push_back(v);
  out_.emplace_back();
  in_.emplace_back();
}

Digraph Digraph::build(std::span<const VertexId> vertices,
                       std::span<const Arc> arcs, const BuildOptions& options,
                       std::vector<std::string>* warnings) {
  Digraph g;
  for (const VertexId& v : vertices) {
    g.add_vertex(v);
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Arc& a : arcs) {
    if (a.tail == a.head) {
      throw Error(ErrorCode::kLoopArc, "loop arc " + to_string(a) + " not allowed");
    }
    if (!options.auto_declare_endpoints) {
      for (const VertexId* end : {&a.tail, &a.head}) {
        if (!g.index_.contains(*end)) {
          throw Error(ErrorCode::kDanglingEndpoint,
                      "arc " + to_string(a) + " uses undeclared vertex '" + *end + "'");
        }
      }
    }
    if (!seen.emplace(a.tail, a.head).second) {
      if (warnings) {
        warnings->push_back("duplicate arc " + to_string(a) + " ignored");
      }
      continue;
    }
    g.add_vertex(a.tail);
    g.add_vertex(a.head);
    g.arcs_.push_back(a);
    g.out_[g.index_.at(a.tail)].push_back(a.head);
    g.in_[g.index_.at(a.head)].push_back(a.tail);
  }
  return g;
}

Digraph Digraph::build(std::initializer_list<VertexId> vertices,
                       std::initializer_list<Arc> arcs,
                       const BuildOptions& options,
                       std::vector<std::string>* warnings) {
  return build(std::span<const VertexId>(vertices.begin(), vertices.size()),
               std::span<const Arc>(arcs.begin(), arcs.size()), options, warnings);
}

std::size_t Digraph::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
  }
  return it->second;
}

bool Digraph::has_vertex(const VertexId& v) const { return index_.contains(v); }

bool Digraph::has_arc(const VertexId& tail, const VertexId& head) const {
  if (!has_vertex(tail) || !has_vertex(head)) return false;
  const auto& outs = out_[index_.at(tail)];
  return std::find(outs.begin(), outs.end(), head) != outs.end();
}

const std::vector<VertexId>& Digraph::out_neighbors(const VertexId& v) const {
  return out_[index_of(v)];
}

const std::vector<VertexId>& Digraph::in_neighbors(const VertexId& v) const {
  return in_[index_of(v)];
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) {
    return false;
  }
  for (const VertexId& v : a.vertices_) {
    if (!b.has_vertex(v)) return false;
  }
  for (const Arc& arc : a.arcs_) {
    if (!b.has_arc(arc.tail, arc.head)) return false;
  }
  return true;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile profile;
  profile.entries.reserve(g.vertex_count());
  for (const VertexId& v : g.vertices()) {
    VertexDegrees d;
    d.vertex = v;
    d.in_neighbors = g.in_neighbors(v);
    d.out_neighbors = g.out_neighbors(v);
    d.in_degree = d.in_neighbors.size();
    d.out_degree = d.out_neighbors.size();
    d.neighbors = d.in_neighbors;
    for (const VertexId& u : d.out_neighbors) {
      if (std::find(d.neighbors.begin(), d.neighbors.end(), u) == d.neighbors.end()) {
        d.neighbors.push_back(u);
      }
    }
    profile.entries.push_back(std::move(d));
  }
  return profile;
}

const VertexDegrees& DegreeProfile::at(const VertexId& v) const {
  for (const VertexDegrees& d : entries) {
    if (d.vertex == v) return d;
  }
  throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
}

std::vector<VertexId> neighborhood(const Digraph& g, std::span<const VertexId> set) {
  std::set<VertexId> result;
  for (const VertexId& v : set) {
    for (const VertexId& u : g.in_neighbors(v)) result.insert(u);
    for (const VertexId& u : g.out_neighbors(v)) result.insert(u);
  }
  return {result.begin(), result.end()};
}

StructuralFlags classify(const Digraph& g) {
  StructuralFlags flags;
  // Simplicity is enforced at construction; verify rather than assume.
  flags.is_simple = true;
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Arc& a : g.arcs()) {
    if (a.tail == a.head || !pairs.emplace(a.tail, a.head).second) {
      flags.is_simple = false;
    }
  }
  flags.is_symmetric = true;
  flags.is_oriented = true;
  for (const Arc& a : g.arcs()) {
    if (g.has_arc(a.head, a.tail)) {
      flags.is_oriented = false;
    } else {
      flags.is_symmetric = false;
    }
  }
  flags.underlying_is_complete = true;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size() && flags.underlying_is_complete; ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_arc(vs[i], vs[j]) && !g.has_arc(vs[j], vs[i])) {
        flags.underlying_is_complete = false;
        break;
      }
    }
  }
  return flags;
}

Digraph underlying_graph(const Digraph& g) {
  std::vector<Arc> arcs;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Arc& a : g.arcs()) {
    if (seen.emplace(a.tail, a.head).second) {
      arcs.push_back(a);
    }
    if (seen.emplace(a.head, a.tail).second) {
      arcs.push_back({a.head, a.tail});
    }
  }
  return Digraph::build(g.vertices(), arcs);
}

Digraph induced_subdigraph(const Digraph& g, std::span<const VertexId> keep) {
  std::set<VertexId> kept;
  for (const VertexId& v : keep) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
    }
    kept.insert(v);
  }
  std::vector<VertexId> vertices;
  for (const VertexId& v : g.vertices()) {
    if (kept.contains(v)) vertices.push_back(v);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (kept.contains(a.tail) && kept.contains(a.head)) arcs.push_back(a);
  }
  return Digraph::build(vertices, arcs);
}

Digraph delete_vertices(const Digraph& g, std::span<const VertexId> remove) {
  std::set<VertexId> gone;
  for (const VertexId& v : remove) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + v + "'");
    }
    gone.insert(v);
  }
  std::vector<VertexId> vertices;
  for (const VertexId& v : g.vertices()) {
    if (!gone.contains(v)) vertices.push_back(v);
  }
  return induced_subdigraph(g, vertices);
}

Digraph delete_arcs(const Digraph& g, std::span<const Arc> remove) {
  std::set<std::pair<VertexId, VertexId>> gone;
  for (const Arc& a : remove) {
    if (!g.has_arc(a.tail, a.head)) {
      throw Error(ErrorCode::kUnknownArc, "unknown arc " + to_string(a));
    }
    gone.emplace(a.tail, a.head);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (!gone.contains({a.tail, a.head})) arcs.push_back(a);
  }
  return Digraph::build(g.vertices(), arcs);
}

}  // namespace dgi
