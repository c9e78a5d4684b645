#include "dgi/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "dgi/error.hpp"

namespace dgi {
namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t parent_function_bound(const Digraph& g, const VertexId& root) {
  std::uint64_t bound = 1;
  for (const VertexId& v : g.vertices()) {
    if (v == root) continue;
    const std::uint64_t degree = g.in_degree(v);
    if (degree == 0) return 0;
    if (bound > std::numeric_limits<std::uint64_t>::max() / degree) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    bound *= degree;
  }
  return bound;
}

std::vector<VertexId> sorted_labels(std::vector<VertexId> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<Arc> sorted_arcs(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

void join_labels(std::ostringstream& out, const std::vector<VertexId>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out << " ";
    out << labels[i];
  }
}

void join_arcs(std::ostringstream& out, const std::vector<Arc>& arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0) out << " ";
    out << arcs[i].tail << "->" << arcs[i].head;
  }
}

ordered_json json_labels(const std::vector<VertexId>& labels) {
  return ordered_json(sorted_labels(labels));
}

ordered_json json_arcs(const std::vector<Arc>& arcs) {
  ordered_json out = ordered_json::array();
  for (const Arc& a : sorted_arcs(arcs)) {
    out.push_back(ordered_json::array({a.tail, a.head}));
  }
  return out;
}

ordered_json json_integrity(const IntegrityCertificate& c) {
  ordered_json out;
  out["value"] = c.value;
  if (c.kind == IntegrityKind::kVertex) {
    out["removed"] = json_labels(c.removed_vertices);
  } else {
    out["removed"] = json_arcs(c.removed_arcs);
  }
  out["strong_component_max"] = c.strong_component_max;
  return out;
}

}  // namespace

AnalysisReport analyze(const Digraph& g, const AnalyzeOptions& options) {
  AnalysisReport r;
  r.graph = g;
  r.structure = classify(g);
  r.connectivity = connectivity_class(g);
  r.acyclic = is_acyclic(g);
  if (r.acyclic) {
    r.topological_order = topological_sort(g, options.topo_tie_break);
  } else {
    try {
      topological_sort(g);
    } catch (const CyclicGraphError& e) {
      r.cycle_witness = Walk(e.cycle());
    }
  }
  try {
    r.longest_path = longest_path(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooLargeForExhaustive) throw;
  }
  r.closure_additions = transitive_closure_additions(g);
  try {
    r.eccentricity = eccentricity_report(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoEligibleVertex) throw;
  }
  r.strong_components = strong_components(g);
  r.matching = maximum_matching(g);
  r.independent_set = max_independent_set(g);
  r.coloring = chromatic_partition(g);
  r.dominating_set = min_dominating_set(g);
  for (const VertexId& root : arborescence_roots(g)) {
    RootedTreeReport entry;
    entry.root = root;
    entry.tree = extract_arborescence(g, root);
    if (parent_function_bound(g, root) <= options.arborescence_count_limit) {
      entry.count = count_arborescences(g, root);
    }
    r.arborescences.push_back(std::move(entry));
  }
  r.vertex_integrity = vertex_integrity(g);
  r.arc_integrity = arc_integrity(g);
  r.derivation = derivation_report(g);
  return r;
}

bool revalidate_certificates(const AnalysisReport& report, std::string* why) {
  const Digraph& g = report.graph;
  auto fail = [&](const std::string& what, const std::string& detail) {
    if (why) *why = what + ": " + detail;
    return false;
  };
  std::string detail;

  if (report.topological_order &&
      !is_topological_order(g, *report.topological_order)) {
    return fail("topological order", "sequence is not a topological order");
  }
  if (report.cycle_witness) {
    try {
      validate_walk(g, *report.cycle_witness);
    } catch (const Error& e) {
      return fail("cycle witness", e.what());
    }
    if (!report.cycle_witness->is_closed()) {
      return fail("cycle witness", "walk is not closed");
    }
  }
  if (report.longest_path) {
    try {
      validate_walk(g, *report.longest_path);
    } catch (const Error& e) {
      return fail("longest path", e.what());
    }
    if (!report.longest_path->is_path()) {
      return fail("longest path", "walk revisits a vertex");
    }
  }
  if (!check_matching(g, report.matching, &detail)) {
    return fail("matching", detail);
  }
  if (!check_independent_set(g, report.independent_set, &detail)) {
    return fail("independent set", detail);
  }
  if (!check_coloring(g, report.coloring, &detail)) {
    return fail("coloring", detail);
  }
  if (!check_dominating_set(g, report.dominating_set, &detail)) {
    return fail("dominating set", detail);
  }
  for (const RootedTreeReport& entry : report.arborescences) {
    if (entry.tree.root != entry.root) {
      return fail("arborescence", "tree root differs from entry root");
    }
    if (!check_arborescence(g, entry.tree, &detail)) {
      return fail("arborescence at " + entry.root, detail);
    }
  }
  if (!check_integrity(g, report.vertex_integrity, &detail)) {
    return fail("vertex integrity", detail);
  }
  if (!check_integrity(g, report.arc_integrity, &detail)) {
    return fail("arc integrity", detail);
  }
  return true;
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream out;
  const Digraph& g = report.graph;

  out << "graph: " << g.vertex_count() << " vertices, " << g.arc_count()
      << " arcs\n";
  out << "vertices: ";
  join_labels(out, g.vertices());
  out << "\n";

  out << "structure: " << (report.structure.is_simple ? "simple" : "not simple")
      << "; " << (report.structure.is_symmetric ? "symmetric" : "not symmetric")
      << "; " << (report.structure.is_oriented ? "oriented" : "not oriented")
      << "; underlying "
      << (report.structure.underlying_is_complete ? "complete" : "incomplete")
      << "\n";
  out << "connectivity: " << to_string(report.connectivity) << "; "
      << (report.acyclic ? "acyclic" : "cyclic") << "\n";

  if (report.topological_order) {
    out << "topological order: ";
    join_labels(out, *report.topological_order);
    out << "\n";
  }
  if (report.cycle_witness) {
    out << "cycle witness: ";
    join_labels(out, report.cycle_witness->vertices());
    out << "\n";
  }
  if (report.longest_path) {
    out << "longest path (length " << report.longest_path->length() << "): ";
    join_labels(out, report.longest_path->vertices());
    out << "\n";
  } else {
    out << "longest path: skipped (cyclic graph above the exhaustive limit)\n";
  }

  out << "closure additions (" << report.closure_additions.size() << "): ";
  join_arcs(out, sorted_arcs(report.closure_additions));
  out << "\n";

  if (report.eccentricity) {
    const EccentricityReport& e = *report.eccentricity;
    out << "eccentricity (" << e.convention << "): radius " << e.radius
        << ", diameter " << e.diameter << "\n";
    out << "  center: ";
    join_labels(out, sorted_labels(e.center));
    out << "\n  periphery: ";
    join_labels(out, sorted_labels(e.periphery));
    out << "\n";
  } else {
    out << "eccentricity: undefined (no vertex has an outgoing arc)\n";
  }

  out << "strong components (" << report.strong_components.components.size()
      << "):";
  for (const auto& component : report.strong_components.components) {
    out << " {";
    join_labels(out, component);
    out << "}";
  }
  out << "\n";

  out << "matching (" << report.matching.size()
      << (report.matching.is_perfect ? ", perfect" : "") << "): ";
  join_arcs(out, report.matching.arcs);
  out << "\n";
  out << "independent set (" << report.independent_set.size() << "): ";
  join_labels(out, report.independent_set.vertices);
  out << "\n";
  out << "coloring (" << report.coloring.size() << "):";
  for (const auto& color_class : report.coloring.classes) {
    out << " {";
    join_labels(out, color_class);
    out << "}";
  }
  out << "\n";
  out << "dominating set (" << report.dominating_set.size() << "): ";
  join_labels(out, report.dominating_set.vertices);
  out << "\n";

  if (report.arborescences.empty()) {
    out << "spanning arborescence: none (no root reaches every vertex)\n";
  } else {
    for (const RootedTreeReport& entry : report.arborescences) {
      out << "spanning arborescence at " << entry.root << " (";
      if (entry.count) {
        out << *entry.count << " total";
      } else {
        out << "count skipped";
      }
      out << "): ";
      join_arcs(out, entry.tree.arcs());
      out << "\n";
    }
  }

  out << "vertex integrity: " << report.vertex_integrity.value << " (remove {";
  join_labels(out, report.vertex_integrity.removed_vertices);
  out << "}, largest strong component "
      << report.vertex_integrity.strong_component_max << ")\n";
  out << "arc integrity: " << report.arc_integrity.value << " (remove {";
  join_arcs(out, report.arc_integrity.removed_arcs);
  out << "}, largest strong component "
      << report.arc_integrity.strong_component_max << ")\n";

  out << "underivable (in-degree 0): ";
  join_labels(out, sorted_labels(report.derivation.underivable));
  out << "\n";
  out << "non-generative (out-degree 0): ";
  join_labels(out, sorted_labels(report.derivation.non_generative));
  out << "\n";
  for (const auto& [v, derivers] : report.derivation.derivers) {
    out << "  " << v << ": derivers {";
    join_labels(out, derivers);
    out << "}";
    for (const auto& [u, closure] : report.derivation.closure) {
      if (u == v) {
        out << ", reaches {";
        join_labels(out, closure);
        out << "}";
        break;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_json(const AnalysisReport& report) {
  ordered_json doc;
  const Digraph& g = report.graph;

  ordered_json graph;
  graph["order"] = g.vertex_count();
  graph["size"] = g.arc_count();
  graph["vertices"] = json_labels(g.vertices());
  graph["arcs"] = json_arcs(g.arcs());
  doc["graph"] = std::move(graph);

  ordered_json structure;
  structure["simple"] = report.structure.is_simple;
  structure["symmetric"] = report.structure.is_symmetric;
  structure["oriented"] = report.structure.is_oriented;
  structure["underlying_complete"] = report.structure.underlying_is_complete;
  doc["structure"] = std::move(structure);

  ordered_json connectivity;
  connectivity["class"] = to_string(report.connectivity);
  connectivity["acyclic"] = report.acyclic;
  connectivity["topological_order"] =
      report.topological_order ? ordered_json(*report.topological_order)
                               : ordered_json(nullptr);
  connectivity["cycle_witness"] =
      report.cycle_witness ? ordered_json(report.cycle_witness->vertices())
                           : ordered_json(nullptr);
  if (report.longest_path) {
    ordered_json longest;
    longest["length"] = report.longest_path->length();
    longest["vertices"] = ordered_json(report.longest_path->vertices());
    connectivity["longest_path"] = std::move(longest);
  } else {
    connectivity["longest_path"] = nullptr;
  }
  connectivity["closure_additions"] = json_arcs(report.closure_additions);
  if (report.eccentricity) {
    const EccentricityReport& e = *report.eccentricity;
    ordered_json ecc;
    ecc["convention"] = e.convention;
    ecc["radius"] = e.radius;
    ecc["diameter"] = e.diameter;
    ordered_json per_vertex;
    std::vector<std::pair<VertexId, std::size_t>> entries = e.eccentricity;
    std::sort(entries.begin(), entries.end());
    for (const auto& [v, value] : entries) per_vertex[v] = value;
    ecc["eccentricity"] = std::move(per_vertex);
    ecc["center"] = json_labels(e.center);
    ecc["periphery"] = json_labels(e.periphery);
    connectivity["eccentricity"] = std::move(ecc);
  } else {
    connectivity["eccentricity"] = nullptr;
  }
  ordered_json components = ordered_json::array();
  for (const auto& component : report.strong_components.components) {
    components.push_back(json_labels(component));
  }
  connectivity["strong_components"] = std::move(components);
  doc["connectivity"] = std::move(connectivity);

  ordered_json invariants;
  invariants["matching_number"] = report.matching.size();
  invariants["perfect_matching"] = report.matching.is_perfect;
  invariants["independence_number"] = report.independent_set.size();
  invariants["chromatic_number"] = report.coloring.size();
  invariants["domination_number"] = report.dominating_set.size();
  invariants["vertex_integrity"] = report.vertex_integrity.value;
  invariants["arc_integrity"] = report.arc_integrity.value;
  invariants["longest_path_length"] =
      report.longest_path ? ordered_json(report.longest_path->length())
                          : ordered_json(nullptr);
  invariants["radius"] = report.eccentricity
                             ? ordered_json(report.eccentricity->radius)
                             : ordered_json(nullptr);
  invariants["diameter"] = report.eccentricity
                               ? ordered_json(report.eccentricity->diameter)
                               : ordered_json(nullptr);
  ordered_json roots = ordered_json::array();
  for (const RootedTreeReport& entry : report.arborescences) {
    roots.push_back(entry.root);
  }
  invariants["arborescence_roots"] = std::move(roots);
  doc["invariants"] = std::move(invariants);

  ordered_json certificates;
  ordered_json matching;
  matching["arcs"] = json_arcs(report.matching.arcs);
  matching["maximum"] = report.matching.is_maximum;
  matching["perfect"] = report.matching.is_perfect;
  certificates["matching"] = std::move(matching);
  certificates["independent_set"] = json_labels(report.independent_set.vertices);
  ordered_json coloring = ordered_json::array();
  for (const auto& color_class : report.coloring.classes) {
    coloring.push_back(json_labels(color_class));
  }
  certificates["coloring"] = std::move(coloring);
  certificates["dominating_set"] = json_labels(report.dominating_set.vertices);
  ordered_json trees = ordered_json::array();
  for (const RootedTreeReport& entry : report.arborescences) {
    ordered_json tree;
    tree["root"] = entry.root;
    tree["arcs"] = json_arcs(entry.tree.arcs());
    tree["count"] = entry.count ? ordered_json(*entry.count) : ordered_json(nullptr);
    trees.push_back(std::move(tree));
  }
  certificates["arborescences"] = std::move(trees);
  certificates["vertex_integrity"] = json_integrity(report.vertex_integrity);
  certificates["arc_integrity"] = json_integrity(report.arc_integrity);
  doc["certificates"] = std::move(certificates);

  ordered_json derivation;
  derivation["underivable"] = json_labels(report.derivation.underivable);
  derivation["non_generative"] = json_labels(report.derivation.non_generative);
  ordered_json derivers;
  for (const auto& [v, list] : report.derivation.derivers) {
    derivers[v] = json_labels(list);
  }
  derivation["derivers"] = std::move(derivers);
  ordered_json closure;
  for (const auto& [v, list] : report.derivation.closure) {
    closure[v] = json_labels(list);
  }
  derivation["closure"] = std::move(closure);
  doc["derivation"] = std::move(derivation);

  return doc.dump(2) + "\n";
}

}  // namespace dgi
