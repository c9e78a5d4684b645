// Randomized cross-checks: every exact solver against an independent
// brute-force oracle, plus the structural properties that must hold on any
// simple digraph. The acceptance harness repeats these on a larger corpus;
// here a smaller one keeps the unit run quick.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include "dgi/arborescence.hpp"
#include "dgi/connectivity.hpp"
#include "dgi/invariants.hpp"
#include "dgi/graph_io.hpp"
#include "dgi/walk.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace dgi;
using namespace dgi::test;

namespace {

CorpusSpec small_corpus() {
  CorpusSpec spec;
  spec.count = 60;
  spec.seed = 424242;
  return spec;
}

}  // namespace

TEST_CASE("solver values agree with brute force on random digraphs") {
  std::size_t index = 0;
  for (const Digraph& g : random_corpus(small_corpus())) {
    CAPTURE(index);
    CAPTURE(serialize_graph_text(g));
    RawDigraph rd = raw(g);

    CHECK(maximum_matching(g).size() == oracle_matching_number(rd));
    CHECK(max_independent_set(g).vertices.size() ==
          oracle_independence_number(rd));
    CHECK(chromatic_partition(g).size() == oracle_chromatic_number(rd));
    CHECK(min_dominating_set(g).vertices.size() ==
          oracle_domination_number(rd));
    CHECK(longest_path(g).length() == oracle_longest_path_length(rd));
    ++index;
  }
}

TEST_CASE("closure, components, and distances agree with brute force") {
  std::size_t index = 0;
  for (const Digraph& g : random_corpus(small_corpus())) {
    CAPTURE(index);
    CAPTURE(serialize_graph_text(g));
    RawDigraph rd = raw(g);

    CHECK(arc_pairs(transitive_closure(g).arcs()) == oracle_closure_arcs(rd));

    std::set<std::set<VertexId>> components;
    for (const auto& comp : strong_components(g).components) {
      components.insert(std::set<VertexId>(comp.begin(), comp.end()));
    }
    CHECK(components == oracle_strong_components(rd));

    DistanceMatrix dm = all_pairs_distances(g);
    auto table = oracle_distances(rd);
    for (const VertexId& u : g.vertices()) {
      for (const VertexId& v : g.vertices()) {
        auto it = table.find({u, v});
        std::optional<std::size_t> want;
        if (it != table.end()) want = it->second;
        CHECK(dm.distance(u, v) == want);
      }
    }
    ++index;
  }
}

TEST_CASE("integrity matches exhaustive removal search on small digraphs") {
  CorpusSpec spec;
  spec.count = 25;
  spec.max_vertices = 5;
  spec.seed = 31337;
  for (const Digraph& g : random_corpus(spec)) {
    CAPTURE(serialize_graph_text(g));
    RawDigraph rd = raw(g);
    CHECK(vertex_integrity(g).value == oracle_vertex_integrity(rd));
    CHECK(arc_integrity(g).value == oracle_arc_integrity(rd));
  }
}

TEST_CASE("arborescence counts match parent-function enumeration") {
  CorpusSpec spec;
  spec.count = 30;
  spec.max_vertices = 6;
  spec.seed = 555;
  for (const Digraph& g : random_corpus(spec)) {
    CAPTURE(serialize_graph_text(g));
    RawDigraph rd = raw(g);
    std::vector<VertexId> roots = arborescence_roots(g);
    for (const VertexId& v : g.vertices()) {
      std::uint64_t want = oracle_count_arborescences(rd, v);
      CHECK(count_arborescences(g, v) == want);
      bool is_root =
          std::find(roots.begin(), roots.end(), v) != roots.end();
      CHECK(is_root == (want > 0));
      if (is_root) {
        CHECK(check_arborescence(g, extract_arborescence(g, v)));
      }
    }
  }
}

TEST_CASE("every certificate validates and the classic bounds hold") {
  for (const Digraph& g : random_corpus(small_corpus())) {
    CAPTURE(serialize_graph_text(g));

    MatchingCertificate m = maximum_matching(g);
    IndependentSetCertificate a = max_independent_set(g);
    ColoringCertificate c = chromatic_partition(g);
    DominatingSetCertificate d = min_dominating_set(g);
    std::string why;
    CHECK(check_matching(g, m, &why));
    CHECK(check_independent_set(g, a, &why));
    CHECK(check_coloring(g, c, &why));
    CHECK(check_dominating_set(g, d, &why));
    CHECK(check_integrity(g, vertex_integrity(g), &why));
    CHECK(check_integrity(g, arc_integrity(g), &why));

    // Color classes are independent sets, so chi * alpha >= n.
    CHECK(c.size() * a.vertices.size() >= g.vertex_count());

    // A vertex nobody points at can only be dominated by itself.
    for (const VertexId& v : g.vertices()) {
      if (g.in_degree(v) == 0) {
        CHECK(std::find(d.vertices.begin(), d.vertices.end(), v) !=
              d.vertices.end());
      }
    }

    // Closing an already-closed graph adds nothing.
    Digraph closed = transitive_closure(g);
    CHECK(transitive_closure_additions(closed).empty());
    CHECK(transitive_closure(closed) == closed);
  }
}

TEST_CASE("random walks reduce to paths inside the same graph") {
  CorpusSpec spec;
  spec.count = 40;
  spec.seed = 2024;
  std::mt19937 rng(17);
  for (const Digraph& g : random_corpus(spec)) {
    for (int i = 0; i < 4; ++i) {
      Walk w = random_walk(rng, g, 12);
      if (w.length() == 0) continue;  // single vertex: nothing to reduce
      if (w.first() == w.last()) continue;
      Walk p = walk_to_path(g, w);
      CHECK(p.is_path());
      CHECK(p.first() == w.first());
      CHECK(p.last() == w.last());
      auto walk_arcs = arc_pairs(w.arcs());
      for (const Arc& arc : p.arcs()) {
        CHECK(walk_arcs.count({arc.tail, arc.head}) == 1);
      }
    }
  }
}
