#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgi/error.hpp"

namespace dgi {

// Vertex identity is the label itself: a nonempty printable token without
// whitespace. No numeric handles appear anywhere in the public interface.
using VertexId = std::string;

struct Arc {
  VertexId tail;
  VertexId head;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& arc);

struct BuildOptions {
  // With auto-declaration off, an arc endpoint missing from the vertex list
  // raises DanglingEndpoint instead of being appended.
  bool auto_declare_endpoints = true;
};

// A finite simple digraph: no loops, no parallel arcs. Vertices and arcs
// remember their insertion order so that every derived artifact (reports,
// certificates, serializations) is reproducible run to run.
class Digraph {
 public:
  Digraph() = default;

  // Duplicate vertices are dropped silently; duplicate arcs are dropped and
  // reported through `warnings` when a sink is provided. Loops always throw.
  static Digraph build(std::span<const VertexId> vertices,
                       std::span<const Arc> arcs, const BuildOptions& options = {},
                       std::vector<std::string>* warnings = nullptr);
  static Digraph build(std::initializer_list<VertexId> vertices,
                       std::initializer_list<Arc> arcs,
                       const BuildOptions& options = {},
                       std::vector<std::string>* warnings = nullptr);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_vertex(const VertexId& v) const;
  bool has_arc(const VertexId& tail, const VertexId& head) const;

  // Neighbor lists are in arc-insertion order. Unknown vertices throw.
  const std::vector<VertexId>& out_neighbors(const VertexId& v) const;
  const std::vector<VertexId>& in_neighbors(const VertexId& v) const;
  std::size_t out_degree(const VertexId& v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(const VertexId& v) const { return in_neighbors(v).size(); }

  // Set equality on vertices and arcs; insertion order does not participate.
  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  std::size_t index_of(const VertexId& v) const;
  void add_vertex(const VertexId& v);

  std::vector<VertexId> vertices_;
  std::vector<Arc> arcs_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

// Degrees and neighborhoods of every vertex, in vertex-insertion order.
struct VertexDegrees {
  VertexId vertex;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  std::vector<VertexId> in_neighbors;
  std::vector<VertexId> out_neighbors;
  std::vector<VertexId> neighbors;  // in + out, duplicates removed
};

struct DegreeProfile {
  std::vector<VertexDegrees> entries;

  const VertexDegrees& at(const VertexId& v) const;  // UnknownVertex if absent
};

DegreeProfile degree_profile(const Digraph& g);

// Union of the neighborhoods of the given vertices. Members of `set` are not
// excluded from the result: a vertex of the set that is adjacent to another
// member appears. Result is sorted by label.
std::vector<VertexId> neighborhood(const Digraph& g, std::span<const VertexId> set);

// Structural classification flags.
struct StructuralFlags {
  bool is_simple = false;      // always true for a Digraph; recomputed anyway
  bool is_symmetric = false;   // every arc has its reverse
  bool is_oriented = false;    // no two-cycles
  bool underlying_is_complete = false;
};

StructuralFlags classify(const Digraph& g);

// Symmetric digraph carrying the underlying (undirected) structure: for each
// arc both directions are present. Vertex order is preserved; arc order
// follows the first appearance of each unordered pair.
Digraph underlying_graph(const Digraph& g);

// Subdigraph induced on `keep` (all arcs with both endpoints kept). Vertex
// order follows the host graph, not `keep`.
Digraph induced_subdigraph(const Digraph& g, std::span<const VertexId> keep);

Digraph delete_vertices(const Digraph& g, std::span<const VertexId> remove);
Digraph delete_arcs(const Digraph& g, std::span<const Arc> remove);

}  // namespace dgi
