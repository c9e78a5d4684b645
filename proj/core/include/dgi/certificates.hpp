#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dgi/digraph.hpp"

namespace dgi {

// Certificates are plain values produced by the exact solvers. Every one of
// them can be re-validated from scratch by the check_* functions below, which
// share no state with any solver.

struct MatchingCertificate {
  std::vector<Arc> arcs;  // pairwise endpoint-disjoint, sorted
  bool is_maximum = false;
  bool is_perfect = false;  // matched vertices cover V

  std::size_t size() const { return arcs.size(); }
};

struct IndependentSetCertificate {
  std::vector<VertexId> vertices;  // sorted by label

  std::size_t size() const { return vertices.size(); }
};

struct ColoringCertificate {
  // Color classes in canonical order: scanning vertices by label, each class
  // is opened by its first member. Members sorted by label.
  std::vector<std::vector<VertexId>> classes;

  std::size_t size() const { return classes.size(); }
};

struct DominatingSetCertificate {
  std::vector<VertexId> vertices;  // sorted by label

  std::size_t size() const { return vertices.size(); }
};

enum class IntegrityKind { kVertex, kArc };

// Witness for integrity values: removing `removed_*` leaves a graph whose
// largest strong component has `strong_component_max` vertices, and
// value = |removed| + strong_component_max.
struct IntegrityCertificate {
  IntegrityKind kind = IntegrityKind::kVertex;
  std::vector<VertexId> removed_vertices;
  std::vector<Arc> removed_arcs;
  std::size_t strong_component_max = 0;
  std::size_t value = 0;

  std::size_t removal_size() const {
    return kind == IntegrityKind::kVertex ? removed_vertices.size()
                                          : removed_arcs.size();
  }
};

// Directed spanning tree: every vertex except the root has exactly one
// parent, and following parents always ends at the root.
struct Arborescence {
  VertexId root;
  std::vector<std::pair<VertexId, VertexId>> parents;  // (child, parent)

  std::vector<Arc> arcs() const;  // (parent, child), in `parents` order
};

struct PartitionCheck {
  std::vector<std::vector<VertexId>> parts;
  bool is_p_partite = false;           // no arc inside any part
  bool is_complete_p_partite = false;  // every cross pair joined some way

  std::size_t p() const { return parts.size(); }
};

// Structural checkers. Each returns whether the certificate's own invariants
// hold against `g`; on failure `why` (when non-null) receives the first
// violated condition. Optimality is in scope only where it is part of the
// certificate's stated invariant (e.g. is_perfect), not minimality or
// maximality over all candidates.
bool check_matching(const Digraph& g, const MatchingCertificate& c,
                    std::string* why = nullptr);
bool check_independent_set(const Digraph& g, const IndependentSetCertificate& c,
                           std::string* why = nullptr);
bool check_coloring(const Digraph& g, const ColoringCertificate& c,
                    std::string* why = nullptr);
bool check_dominating_set(const Digraph& g, const DominatingSetCertificate& c,
                          std::string* why = nullptr);
bool check_integrity(const Digraph& g, const IntegrityCertificate& c,
                     std::string* why = nullptr);
bool check_arborescence(const Digraph& g, const Arborescence& a,
                        std::string* why = nullptr);

}  // namespace dgi
