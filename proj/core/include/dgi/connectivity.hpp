#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgi/digraph.hpp"
#include "dgi/walk.hpp"

namespace dgi {

enum class ConnectivityClass { kStrong, kWeaklyConnected, kDisconnected };
std::string to_string(ConnectivityClass c);

// Shortest-path distances between all ordered pairs; nullopt = unreachable.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<VertexId> vertices, std::vector<std::vector<int>> dist);

  std::optional<std::size_t> distance(const VertexId& from, const VertexId& to) const;
  const std::vector<VertexId>& vertices() const { return vertices_; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::vector<int>> dist_;  // -1 = unreachable
};

DistanceMatrix all_pairs_distances(const Digraph& g);

// Eccentricities under the ACTIVE-SOURCE convention: only vertices reaching
// at least one other vertex carry an eccentricity; sinks and isolated
// vertices are skipped. The tag names the convention in every report.
inline constexpr const char* kActiveSourceConvention = "active-source";

struct EccentricityReport {
  std::vector<std::pair<VertexId, std::size_t>> eccentricity;  // insertion order
  std::size_t radius = 0;
  std::size_t diameter = 0;
  std::vector<VertexId> center;     // e(v) == radius, insertion order
  std::vector<VertexId> periphery;  // e(v) == diameter, insertion order
  std::string convention = kActiveSourceConvention;
};

EccentricityReport eccentricity_report(const Digraph& g);  // NoEligibleVertex

// Maximal strongly connected subdigraphs. Components are listed in a
// topological order of the condensation; members keep insertion order.
struct StrongComponentPartition {
  std::vector<std::vector<VertexId>> components;

  const std::vector<std::vector<VertexId>>& condensation_order() const {
    return components;
  }
  std::size_t max_component_order() const;
};

StrongComponentPartition strong_components(const Digraph& g);

ConnectivityClass connectivity_class(const Digraph& g);

// D* on the same vertices: arc (u,v) with u != v present iff v is reachable
// from u. Original arcs keep their order; additions follow sorted by
// (tail insertion position, head insertion position).
Digraph transitive_closure(const Digraph& g);
std::vector<Arc> transitive_closure_additions(const Digraph& g);

bool reachable(const Digraph& g, const VertexId& from, const VertexId& to);
bool is_acyclic(const Digraph& g);

enum class TopoTieBreak {
  kInsertionOrder,
  kHighestLabelFirst,  // among ready vertices pick the greatest label
};

// Throws CyclicGraphError (with a witness cycle) when no order exists.
std::vector<VertexId> topological_sort(
    const Digraph& g, TopoTieBreak tie_break = TopoTieBreak::kInsertionOrder);
bool is_topological_order(const Digraph& g, std::span<const VertexId> order);

// Maximum-length path. Exact DP on acyclic graphs; exhaustive search
// otherwise, refused above the vertex threshold (TooLargeForExhaustive).
inline constexpr std::size_t kLongestPathExhaustiveLimit = 12;
Walk longest_path(const Digraph& g,
                  std::size_t exhaustive_limit = kLongestPathExhaustiveLimit);

}  // namespace dgi
