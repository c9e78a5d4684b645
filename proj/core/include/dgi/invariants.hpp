#pragma once

#include <vector>

#include "dgi/certificates.hpp"
#include "dgi/digraph.hpp"

namespace dgi {

// Exact solvers for the NP-hard invariants. Branch-and-bound over bitmask
// adjacency; the optimum value is unique by definition and the returned
// certificate is the lexicographically least optimal witness under label
// order, so results are reproducible run to run.
//
// Masks cap inputs at 64 vertices (TooLargeForExhaustive beyond); the
// practical exact bound is around 25 vertices.
inline constexpr std::size_t kExactSolverVertexCap = 64;

// Adjacency for matching, independence, and coloring is "some arc in either
// direction": these three invariants equal those of the underlying graph.
MatchingCertificate maximum_matching(const Digraph& g);
IndependentSetCertificate max_independent_set(const Digraph& g);
ColoringCertificate chromatic_partition(const Digraph& g);

// Domination is directional: every vertex outside S needs an in-neighbor
// inside S. A vertex of in-degree 0 therefore sits in every dominating set.
DominatingSetCertificate min_dominating_set(const Digraph& g);

// Integrity: min over removal sets F of |F| + (order of the largest strong
// component after removal). Acyclic graphs score 1 with F empty.
IntegrityCertificate vertex_integrity(const Digraph& g);
IntegrityCertificate arc_integrity(const Digraph& g);

// Verifies that `parts` partitions V(D) (NotAPartition otherwise) and
// reports the partite-structure flags.
PartitionCheck check_partition(const Digraph& g,
                               const std::vector<std::vector<VertexId>>& parts);

}  // namespace dgi
