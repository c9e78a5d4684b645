#include "dgi/reproduce.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "dgi/certificates.hpp"
#include "dgi/connectivity.hpp"
#include "dgi/invariants.hpp"
#include "dgi/report.hpp"

namespace dgi {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::string count_text(std::size_t value) { return std::to_string(value); }

std::string set_text(std::vector<VertexId> labels) {
  std::sort(labels.begin(), labels.end());
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels[i];
  }
  return out + "}";
}

std::string arc_set_text(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  std::string out = "{";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + arcs[i].tail + ", " + arcs[i].head + ")";
  }
  return out + "}";
}

std::string sequence_text(const std::vector<VertexId>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += " ";
    out += labels[i];
  }
  return out;
}

// Reads a figure's arc list as a parent map rooted at `root`.
Arborescence arborescence_from_arcs(const VertexId& root,
                                    const std::vector<Arc>& arcs) {
  Arborescence tree;
  tree.root = root;
  for (const Arc& arc : arcs) tree.parents.push_back({arc.head, arc.tail});
  return tree;
}

std::size_t tree_depth(const Arborescence& tree) {
  std::map<VertexId, VertexId> parent;
  for (const auto& [child, p] : tree.parents) parent[child] = p;
  std::size_t depth = 0;
  for (const auto& [child, p] : tree.parents) {
    std::size_t steps = 0;
    VertexId v = child;
    while (v != tree.root && steps <= parent.size()) {
      v = parent.at(v);
      ++steps;
    }
    depth = std::max(depth, steps);
  }
  return depth;
}

class ClaimBuilder {
 public:
  ClaimBuilder(std::string fixture, const std::vector<std::string>& deviations,
               std::vector<ClaimResult>& out)
      : fixture_(std::move(fixture)), deviations_(deviations), out_(out) {}

  void add(const std::string& id, const std::string& statement,
           const std::string& stated, const std::string& computed) {
    Verdict verdict = Verdict::kMatch;
    if (stated != computed) {
      const bool excused = std::find(deviations_.begin(), deviations_.end(),
                                     id) != deviations_.end();
      verdict = excused ? Verdict::kKnownDeviation : Verdict::kMismatch;
    }
    out_.push_back({fixture_, id, statement, stated, computed, verdict});
  }

  // Witness claims: the stated object either re-validates or it does not.
  void add_witness(const std::string& id, const std::string& statement,
                   bool valid, const std::string& why) {
    add(id, statement, "valid", valid ? "valid" : "invalid (" + why + ")");
  }

 private:
  std::string fixture_;
  const std::vector<std::string>& deviations_;
  std::vector<ClaimResult>& out_;
};

// Everything reachable from `v`, excluding `v` itself, as a sorted set.
std::vector<VertexId> reachable_set(const Digraph& g, const VertexId& v) {
  std::vector<VertexId> out;
  for (const VertexId& u : g.vertices()) {
    if (u != v && reachable(g, v, u)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> others(const Digraph& g, const VertexId& v) {
  std::vector<VertexId> out;
  for (const VertexId& u : g.vertices()) {
    if (u != v) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void derivation_claims(FixtureId id, const Digraph& g, const AnalysisReport& r,
                      ClaimBuilder& c) {
  switch (id) {
    case FixtureId::kD1:
      c.add("Cor3.1.underivable",
            "submanifolds no other submanifold derives (in-degree 0)",
            "{v2, v4}", set_text(r.derivation.underivable));
      c.add("Cor3.1.derivers.v1", "in-neighbors of v1", "{v2, v4}",
            set_text(g.in_neighbors("v1")));
      c.add("Cor3.1.derivers.v3", "in-neighbors of v3", "{v2, v4}",
            set_text(g.in_neighbors("v3")));
      break;
    case FixtureId::kD2:
      c.add("Cor3.2.underivable",
            "submanifolds no other submanifold derives (in-degree 0)",
            "{v4, v6}", set_text(r.derivation.underivable));
      c.add("Cor3.2.derivers.v1", "in-neighbors of v1", "{v2, v4, v6}",
            set_text(g.in_neighbors("v1")));
      c.add("Cor3.2.derivers.v3", "in-neighbors of v3", "{v2, v4, v6}",
            set_text(g.in_neighbors("v3")));
      break;
    case FixtureId::kD3:
      c.add("Cor3.3.no-sources", "in-neighbors of v5", "{}",
            set_text(g.in_neighbors("v5")));
      c.add("Cor3.3.root-derives-all",
            "every other submanifold is reachable from v5",
            set_text(others(g, "v5")), set_text(reachable_set(g, "v5")));
      break;
    case FixtureId::kD4:
      c.add("Cor3.4.underivable",
            "submanifolds no other submanifold derives (in-degree 0)",
            "{v5, v6}", set_text(r.derivation.underivable));
      // The source text writes N^- here, but its own words say "derived
      // from", which is the out-direction: v1 and v3 generate nothing.
      c.add("Cor3.4.sinks", "submanifolds deriving nothing (out-degree 0)",
            "{v1, v3}", set_text(r.derivation.non_generative));
      break;
    case FixtureId::kD5:
      c.add("Cor3.5.out-neighbors", "out-neighbors of v7", "{v5, v6}",
            set_text(g.out_neighbors("v7")));
      c.add("Cor3.5.no-in", "in-neighbors of v7", "{}",
            set_text(g.in_neighbors("v7")));
      c.add("Cor3.5.root-derives-all",
            "every other submanifold is reachable from v7",
            set_text(others(g, "v7")), set_text(reachable_set(g, "v7")));
      break;
    case FixtureId::kD6:
      c.add("Cor3.6.non-generative",
            "non-generative submanifolds (out-degree 0)", "{v1, v3}",
            set_text(r.derivation.non_generative));
      c.add("Cor3.6.most-productive",
            "every other submanifold is reachable from v7",
            set_text(others(g, "v7")), set_text(reachable_set(g, "v7")));
      break;
  }
}

void fixture_claims(FixtureId id, std::vector<ClaimResult>& out) {
  const NetworkFixture& f = fixture(id);
  const Digraph& g = f.digraph;
  const FixtureExpectations& e = f.expected;

  AnalyzeOptions options;
  options.topo_tie_break = TopoTieBreak::kHighestLabelFirst;
  const AnalysisReport r = analyze(g, options);

  ClaimBuilder c(f.name, f.deviations, out);
  const std::string thm = "Thm3." + f.name.substr(1);
  std::string why;

  c.add("order.vertices", "number of vertices", count_text(e.order),
        count_text(g.vertex_count()));
  c.add("size.arcs", "number of arcs as stated in prose",
        count_text(e.size_prose), count_text(g.arc_count()));

  // i: partite structure.
  const PartitionCheck partition = check_partition(g, e.partition);
  c.add(thm + ".i.partite",
        "stated partition " + std::to_string(e.partition.size()) +
            " parts, no arc inside any part",
        count_text(e.partite_number) + "-partite",
        partition.is_p_partite ? count_text(partition.p()) + "-partite"
                               : "some part contains an arc");
  if (e.complete_partite_claimed) {
    c.add(thm + ".i.complete", "every cross pair of the partition is joined",
          "complete bipartite",
          partition.is_complete_p_partite ? "complete bipartite"
                                          : "not complete");
  }

  // ii: matching.
  c.add(thm + ".ii.matching", "maximum matching size",
        count_text(e.matching_number), count_text(r.matching.size()));
  MatchingCertificate stated_matching;
  stated_matching.arcs = e.matching_witness;
  std::sort(stated_matching.arcs.begin(), stated_matching.arcs.end());
  stated_matching.is_maximum = stated_matching.size() == r.matching.size();
  stated_matching.is_perfect = 2 * stated_matching.size() == g.vertex_count();
  bool ok = check_matching(g, stated_matching, &why) &&
            stated_matching.size() == e.matching_number;
  c.add_witness(thm + ".ii.witness",
                "stated matching " + arc_set_text(e.matching_witness), ok, why);
  if (e.perfect_matching_claimed) {
    c.add(thm + ".ii.perfect", "maximum matching covers every vertex", "true",
          bool_text(2 * r.matching.size() == g.vertex_count()));
  }
  if (e.half_arcs_wording) {
    // The proof also writes |M| = |A|/2, an arc-count reading of "perfect".
    c.add(thm + ".ii.half-arcs", "|M| compared against |A|/2",
          count_text(g.arc_count() / 2), count_text(r.matching.size()));
  }

  // iii: independence.
  c.add(thm + ".iii.independence", "independence number",
        count_text(e.independence_number), count_text(r.independent_set.size()));
  IndependentSetCertificate stated_independent;
  stated_independent.vertices = e.independent_witness;
  std::sort(stated_independent.vertices.begin(), stated_independent.vertices.end());
  ok = check_independent_set(g, stated_independent, &why) &&
       stated_independent.size() == e.independence_number;
  c.add_witness(thm + ".iii.witness",
                "stated independent set " + set_text(e.independent_witness), ok,
                why);

  // iv: chromatic number; the stated partition doubles as the coloring.
  c.add(thm + ".iv.chromatic", "chromatic number",
        count_text(e.chromatic_number), count_text(r.coloring.size()));
  ColoringCertificate stated_coloring;
  stated_coloring.classes = e.partition;
  for (auto& color_class : stated_coloring.classes) {
    std::sort(color_class.begin(), color_class.end());
  }
  ok = check_coloring(g, stated_coloring, &why) &&
       stated_coloring.size() == e.chromatic_number;
  c.add_witness(thm + ".iv.witness", "stated partition as a proper coloring",
                ok, why);

  // v: directed spanning tree.
  c.add(thm + ".v.tree", "a directed spanning tree exists",
        bool_text(e.spanning_tree_exists), bool_text(!r.arborescences.empty()));
  if (e.spanning_tree_exists) {
    bool root_found = false;
    std::uint64_t count_at_root = 0;
    for (const RootedTreeReport& entry : r.arborescences) {
      if (entry.root == e.tree_root) {
        root_found = true;
        count_at_root = entry.count.value_or(0);
      }
    }
    c.add(thm + ".v.root", "tree root as stated", e.tree_root,
          root_found ? e.tree_root : "not a root");
    const Arborescence figure = arborescence_from_arcs(e.tree_root, e.tree_witness);
    ok = check_arborescence(g, figure, &why) &&
         figure.parents.size() == e.tree_length;
    c.add_witness(thm + ".v.witness",
                  "figure tree " + arc_set_text(e.tree_witness) + " of length " +
                      count_text(e.tree_length),
                  ok, why);
    if (e.tree_unique_claimed) {
      c.add(thm + ".v.unique", "number of directed spanning trees at the root",
            "1", std::to_string(count_at_root));
    }
    if (e.tree_depth_limit > 0) {
      const std::size_t depth = tree_depth(figure);
      c.add(thm + ".v.depth",
            "every submanifold reached from the root within " +
                count_text(e.tree_depth_limit) + " steps",
            "<= " + count_text(e.tree_depth_limit),
            depth <= e.tree_depth_limit ? "<= " + count_text(e.tree_depth_limit)
                                        : count_text(depth));
    }
  }

  // vi: domination.
  c.add(thm + ".vi.domination", "domination number",
        count_text(e.domination_number), count_text(r.dominating_set.size()));
  DominatingSetCertificate stated_dominating;
  stated_dominating.vertices = e.dominating_witness;
  std::sort(stated_dominating.vertices.begin(), stated_dominating.vertices.end());
  ok = check_dominating_set(g, stated_dominating, &why) &&
       stated_dominating.size() == e.domination_number;
  c.add_witness(thm + ".vi.witness",
                "stated dominating set " + set_text(e.dominating_witness), ok,
                why);

  // Narrative values.
  c.add("narrative.longest-path", "longest path length",
        count_text(e.longest_path_length),
        r.longest_path ? count_text(r.longest_path->length()) : "unavailable");
  c.add("narrative.unreachable", "vertices no other vertex reaches",
        set_text(e.unreachable), set_text(r.derivation.underivable));
  c.add("narrative.closure-additions", "arcs added by the transitive closure",
        arc_set_text(e.closure_additions), arc_set_text(r.closure_additions));
  const bool stated_order_valid = is_topological_order(g, e.topological_order);
  c.add("narrative.topological-order",
        "stated order is a topological order (computed: " +
            (r.topological_order ? sequence_text(*r.topological_order)
                                 : std::string("none")) +
            ")",
        sequence_text(e.topological_order),
        stated_order_valid ? sequence_text(e.topological_order)
                           : "not a valid topological order");
  c.add("narrative.radius", "radius", count_text(e.radius),
        r.eccentricity ? count_text(r.eccentricity->radius) : "undefined");
  c.add("narrative.diameter", "diameter", count_text(e.diameter),
        r.eccentricity ? count_text(r.eccentricity->diameter) : "undefined");
  c.add("narrative.center", "center vertices",
        e.center_claimed_empty ? "(none)" : set_text(e.center),
        r.eccentricity ? set_text(r.eccentricity->center) : "undefined");
  c.add("narrative.periphery", "peripheral vertices", set_text(e.periphery),
        r.eccentricity ? set_text(r.eccentricity->periphery) : "undefined");

  // The three structural properties shared by all six fixtures.
  c.add("Thm3.7.i", "simple digraph", "true", bool_text(r.structure.is_simple));
  c.add("Thm3.7.ii", "acyclic", "true", bool_text(r.acyclic));
  c.add("Thm3.7.iii", "weakly connected", "true",
        bool_text(r.connectivity == ConnectivityClass::kWeaklyConnected));

  derivation_claims(id, g, r, c);
}

void cross_fixture_claims(std::vector<ClaimResult>& out) {
  static const std::vector<std::string> deviations = {
      "Cor3.8.vertex-integrity", "Cor3.8.arc-integrity"};
  ClaimBuilder c("ALL", deviations, out);

  std::vector<std::pair<std::string, std::size_t>> sizes;
  std::vector<std::pair<std::string, std::size_t>> vertex_values;
  std::vector<std::pair<std::string, std::size_t>> arc_values;
  for (FixtureId id : all_fixture_ids()) {
    const NetworkFixture& f = fixture(id);
    sizes.emplace_back(f.name, f.digraph.arc_count());
    vertex_values.emplace_back(f.name, vertex_integrity(f.digraph).value);
    arc_values.emplace_back(f.name, arc_integrity(f.digraph).value);
  }

  auto holders = [](const std::vector<std::pair<std::string, std::size_t>>& values) {
    std::size_t best = 0;
    for (const auto& [name, value] : values) best = std::max(best, value);
    std::string out;
    for (const auto& [name, value] : values) {
      if (value != best) continue;
      if (!out.empty()) out += ", ";
      out += name;
    }
    return out == "D6" ? std::string("only D6") : "shared by " + out;
  };
  auto values_text = [](const std::vector<std::pair<std::string, std::size_t>>& values) {
    std::string out;
    for (const auto& [name, value] : values) {
      if (!out.empty()) out += " ";
      out += name + "=" + std::to_string(value);
    }
    return out;
  };

  c.add("Cor3.8.size", "maximum size across fixtures (" + values_text(sizes) + ")",
        "only D6", holders(sizes));
  c.add("Cor3.8.vertex-integrity",
        "maximum vertex-integrity across fixtures (" + values_text(vertex_values) + ")",
        "only D6", holders(vertex_values));
  c.add("Cor3.8.arc-integrity",
        "maximum arc-integrity across fixtures (" + values_text(arc_values) + ")",
        "only D6", holders(arc_values));
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch: return "MATCH";
    case Verdict::kKnownDeviation: return "KNOWN_DEVIATION";
    case Verdict::kMismatch: return "MISMATCH";
  }
  return "UNKNOWN";
}

bool ReproductionResult::has_mismatch() const {
  return count(Verdict::kMismatch) > 0;
}

std::size_t ReproductionResult::count(Verdict v) const {
  std::size_t n = 0;
  for (const ClaimResult& claim : claims) {
    if (claim.verdict == v) ++n;
  }
  return n;
}

ReproductionResult reproduce(FixtureId id) {
  ReproductionResult result;
  fixture_claims(id, result.claims);
  return result;
}

ReproductionResult reproduce_all() {
  ReproductionResult result;
  for (FixtureId id : all_fixture_ids()) {
    fixture_claims(id, result.claims);
  }
  cross_fixture_claims(result.claims);
  return result;
}

std::string render_text(const ReproductionResult& result) {
  std::size_t id_width = 0;
  for (const ClaimResult& claim : result.claims) {
    id_width = std::max(id_width, claim.id.size());
  }
  std::ostringstream out;
  for (const ClaimResult& claim : result.claims) {
    out << claim.fixture;
    for (std::size_t i = claim.fixture.size(); i < 4; ++i) out << " ";
    out << claim.id;
    for (std::size_t i = claim.id.size(); i < id_width + 2; ++i) out << " ";
    out << to_string(claim.verdict);
    if (claim.verdict == Verdict::kMatch) {
      out << "  " << claim.computed_value;
    } else {
      out << "  stated=" << claim.stated_value
          << "  computed=" << claim.computed_value;
    }
    out << "\n";
  }
  out << "claims: " << result.claims.size()
      << "  match: " << result.count(Verdict::kMatch)
      << "  known-deviation: " << result.count(Verdict::kKnownDeviation)
      << "  mismatch: " << result.count(Verdict::kMismatch) << "\n";
  return out.str();
}

std::string render_json(const ReproductionResult& result) {
  ordered_json doc;
  ordered_json claims = ordered_json::array();
  for (const ClaimResult& claim : result.claims) {
    ordered_json entry;
    entry["fixture"] = claim.fixture;
    entry["id"] = claim.id;
    entry["statement"] = claim.statement;
    entry["stated_value"] = claim.stated_value;
    entry["computed_value"] = claim.computed_value;
    entry["verdict"] = to_string(claim.verdict);
    claims.push_back(std::move(entry));
  }
  doc["claims"] = std::move(claims);
  ordered_json summary;
  summary["total"] = result.claims.size();
  summary["match"] = result.count(Verdict::kMatch);
  summary["known_deviation"] = result.count(Verdict::kKnownDeviation);
  summary["mismatch"] = result.count(Verdict::kMismatch);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

}  // namespace dgi
