#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgi/arborescence.hpp"
#include "dgi/certificates.hpp"
#include "dgi/connectivity.hpp"
#include "dgi/digraph.hpp"
#include "dgi/invariants.hpp"
#include "dgi/taxonomy.hpp"
#include "dgi/walk.hpp"

namespace dgi {

// One arborescence root with its extracted tree and, when the search space
// is small enough to enumerate, the exact number of distinct trees.
struct RootedTreeReport {
  VertexId root;
  Arborescence tree;
  std::optional<std::uint64_t> count;  // nullopt = enumeration skipped
};

// Everything the analyzer knows about one digraph. All certificate fields
// re-validate against `graph` via revalidate_certificates.
struct AnalysisReport {
  Digraph graph;
  StructuralFlags structure;
  ConnectivityClass connectivity = ConnectivityClass::kDisconnected;
  bool acyclic = false;
  std::optional<std::vector<VertexId>> topological_order;  // set iff acyclic
  std::optional<Walk> cycle_witness;                       // set iff cyclic
  std::optional<Walk> longest_path;  // nullopt when refused (too large, cyclic)
  std::vector<Arc> closure_additions;
  std::optional<EccentricityReport> eccentricity;  // nullopt: no active source
  StrongComponentPartition strong_components;
  MatchingCertificate matching;
  IndependentSetCertificate independent_set;
  ColoringCertificate coloring;
  DominatingSetCertificate dominating_set;
  std::vector<RootedTreeReport> arborescences;  // one entry per root
  IntegrityCertificate vertex_integrity;
  IntegrityCertificate arc_integrity;
  DerivationReport derivation;
};

struct AnalyzeOptions {
  TopoTieBreak topo_tie_break = TopoTieBreak::kInsertionOrder;
  // Arborescences are enumerated one by one; the enumeration is skipped when
  // the parent-function upper bound (product of in-degrees) exceeds this.
  std::uint64_t arborescence_count_limit = 10'000'000;
};

AnalysisReport analyze(const Digraph& g, const AnalyzeOptions& options = {});

// Re-checks every certificate in the report against report.graph from
// scratch, including the topological order, witnesses, and walks. On
// failure, `why` (when non-null) names the first offender.
bool revalidate_certificates(const AnalysisReport& report,
                             std::string* why = nullptr);

std::string render_text(const AnalysisReport& report);

// Deterministic JSON: top-level keys graph / structure / connectivity /
// invariants / certificates / derivation, vertex sets as sorted arrays,
// arc sets as sorted [tail, head] pairs. Two-space indentation.
std::string render_json(const AnalysisReport& report);

}  // namespace dgi
