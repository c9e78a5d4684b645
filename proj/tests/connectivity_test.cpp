#include "dgi/connectivity.hpp"

#include <doctest.h>

#include <array>
#include <set>

#include "dgi/error.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace dgi;
using test::error_code_of;
using test::fix;

namespace {

constexpr std::array<FixtureId, 6> kAll = {FixtureId::kD1, FixtureId::kD2,
                                           FixtureId::kD3, FixtureId::kD4,
                                           FixtureId::kD5, FixtureId::kD6};

Digraph three_cycle() {
  return Digraph::build({}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

}  // namespace

TEST_CASE("distance matrix on the five-vertex network") {
  DistanceMatrix d = all_pairs_distances(fix(FixtureId::kD3));
  CHECK(d.distance("v5", "v2") == 1);
  CHECK(d.distance("v5", "v1") == 2);
  CHECK(d.distance("v1", "v1") == 0);
  CHECK_FALSE(d.distance("v1", "v5").has_value());
  CHECK(error_code_of([&] { d.distance("v1", "zz"); }) ==
        ErrorCode::kUnknownVertex);
}

TEST_CASE("distances agree with Floyd-Warshall on every reference network") {
  for (FixtureId id : kAll) {
    const Digraph& g = fix(id);
    DistanceMatrix d = all_pairs_distances(g);
    auto expected = test::oracle_distances(test::raw(g));
    for (const VertexId& u : g.vertices()) {
      for (const VertexId& v : g.vertices()) {
        auto it = expected.find({u, v});
        if (it == expected.end()) {
          CHECK_FALSE(d.distance(u, v).has_value());
        } else {
          CHECK(d.distance(u, v) == it->second);
        }
      }
    }
  }
}

TEST_CASE("eccentricity under the active-source convention") {
  struct Row {
    std::size_t radius, diameter;
    std::vector<VertexId> center, periphery;
  };
  const std::array<Row, 6> expected = {{
      {1, 1, {"v2", "v4"}, {"v2", "v4"}},
      {1, 1, {"v2", "v4", "v6"}, {"v2", "v4", "v6"}},
      {1, 2, {"v2", "v4"}, {"v5"}},
      {1, 2, {"v2", "v4", "v6"}, {"v5"}},
      {1, 2, {"v2", "v4", "v6"}, {"v5", "v7"}},
      {1, 2, {"v2", "v4", "v5", "v6"}, {"v7"}},
  }};
  for (std::size_t i = 0; i < kAll.size(); ++i) {
    CAPTURE(i);
    EccentricityReport r = eccentricity_report(fix(kAll[i]));
    CHECK(r.convention == kActiveSourceConvention);
    CHECK(r.radius == expected[i].radius);
    CHECK(r.diameter == expected[i].diameter);
    CHECK(r.center == expected[i].center);
    CHECK(r.periphery == expected[i].periphery);
  }

  EccentricityReport d3 = eccentricity_report(fix(FixtureId::kD3));
  CHECK(d3.eccentricity ==
        std::vector<std::pair<VertexId, std::size_t>>{
            {"v2", 1}, {"v4", 1}, {"v5", 2}});

  Digraph arcless = Digraph::build({"a", "b"}, {});
  CHECK(error_code_of([&] { eccentricity_report(arcless); }) ==
        ErrorCode::kNoEligibleVertex);
}

TEST_CASE("strong components come out in condensation order") {
  StrongComponentPartition d3 = strong_components(fix(FixtureId::kD3));
  CHECK(d3.components == std::vector<std::vector<VertexId>>{
                             {"v5"}, {"v4"}, {"v2"}, {"v3"}, {"v1"}});
  CHECK(d3.max_component_order() == 1);

  Digraph g = Digraph::build(
      {}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
  StrongComponentPartition parts = strong_components(g);
  CHECK(parts.components ==
        std::vector<std::vector<VertexId>>{{"a", "b", "c"}, {"d"}});
  CHECK(parts.max_component_order() == 3);
}

TEST_CASE("strong components match mutual reachability on every fixture") {
  for (FixtureId id : kAll) {
    const Digraph& g = fix(id);
    std::set<std::set<VertexId>> got;
    for (const auto& c : strong_components(g).components) {
      got.insert(std::set<VertexId>(c.begin(), c.end()));
    }
    CHECK(got == test::oracle_strong_components(test::raw(g)));
  }
}

TEST_CASE("connectivity classification") {
  for (FixtureId id : kAll) {
    CHECK(connectivity_class(fix(id)) == ConnectivityClass::kWeaklyConnected);
  }
  CHECK(connectivity_class(three_cycle()) == ConnectivityClass::kStrong);
  CHECK(connectivity_class(Digraph::build({"a"}, {})) ==
        ConnectivityClass::kStrong);
  CHECK(connectivity_class(Digraph::build({"a", "b"}, {})) ==
        ConnectivityClass::kDisconnected);
  CHECK(connectivity_class(Digraph::build({}, {{"a", "b"}, {"c", "d"}})) ==
        ConnectivityClass::kDisconnected);

  CHECK(to_string(ConnectivityClass::kStrong) == "strong");
  CHECK(to_string(ConnectivityClass::kWeaklyConnected) == "weakly_connected");
  CHECK(to_string(ConnectivityClass::kDisconnected) == "disconnected");
}

TEST_CASE("transitive closure additions per fixture") {
  const std::array<std::vector<Arc>, 6> expected = {{
      {},
      {},
      {{"v5", "v1"}},
      {{"v5", "v1"}},
      {{"v5", "v1"}, {"v7", "v1"}, {"v7", "v2"}, {"v7", "v3"}, {"v7", "v4"}},
      {{"v7", "v1"}, {"v7", "v2"}, {"v7", "v3"}, {"v7", "v4"}},
  }};
  for (std::size_t i = 0; i < kAll.size(); ++i) {
    CAPTURE(i);
    const Digraph& g = fix(kAll[i]);
    CHECK(transitive_closure_additions(g) == expected[i]);

    Digraph closure = transitive_closure(g);
    CHECK(closure.vertices() == g.vertices());
    CHECK(closure.arc_count() == g.arc_count() + expected[i].size());
    // Closing again adds nothing.
    CHECK(transitive_closure(closure) == closure);
    CHECK(test::arc_pairs(closure.arcs()) ==
          test::oracle_closure_arcs(test::raw(g)));
  }
}

TEST_CASE("closure arcs keep original order, additions appended") {
  Digraph closure = transitive_closure(fix(FixtureId::kD3));
  std::vector<Arc> arcs = fix(FixtureId::kD3).arcs();
  arcs.push_back({"v5", "v1"});
  CHECK(closure.arcs() == arcs);
}

TEST_CASE("reachability") {
  CHECK(reachable(fix(FixtureId::kD5), "v7", "v1"));
  CHECK(reachable(fix(FixtureId::kD5), "v5", "v5"));
  CHECK_FALSE(reachable(fix(FixtureId::kD1), "v1", "v2"));
  CHECK_FALSE(reachable(fix(FixtureId::kD5), "v5", "v6"));
}

TEST_CASE("acyclicity") {
  for (FixtureId id : kAll) {
    CHECK(is_acyclic(fix(id)));
  }
  CHECK_FALSE(is_acyclic(three_cycle()));
  CHECK(is_acyclic(Digraph::build({"a"}, {})));
}

TEST_CASE("topological orders under both tie-breaks") {
  const std::array<std::vector<VertexId>, 6> highest = {{
      {"v4", "v2", "v3", "v1"},
      {"v6", "v4", "v2", "v3", "v1"},
      {"v5", "v4", "v2", "v3", "v1"},
      {"v6", "v5", "v4", "v2", "v3", "v1"},
      {"v7", "v6", "v5", "v4", "v2", "v3", "v1"},
      {"v7", "v6", "v5", "v4", "v2", "v3", "v1"},
  }};
  for (std::size_t i = 0; i < kAll.size(); ++i) {
    CAPTURE(i);
    const Digraph& g = fix(kAll[i]);
    std::vector<VertexId> order =
        topological_sort(g, TopoTieBreak::kHighestLabelFirst);
    CHECK(order == highest[i]);
    CHECK(is_topological_order(g, order));

    std::vector<VertexId> insertion = topological_sort(g);
    CHECK(is_topological_order(g, insertion));
  }
  CHECK(topological_sort(fix(FixtureId::kD3)) ==
        std::vector<VertexId>{"v5", "v2", "v4", "v1", "v3"});
}

TEST_CASE("topological sort of a cyclic graph throws with a witness") {
  Digraph g = three_cycle();
  try {
    topological_sort(g);
    FAIL("expected CyclicGraphError");
  } catch (const CyclicGraphError& e) {
    const auto& cycle = e.cycle();
    REQUIRE(cycle.size() >= 3);
    CHECK(cycle.front() == cycle.back());
    std::set<VertexId> interior(cycle.begin(), cycle.end() - 1);
    CHECK(interior.size() == cycle.size() - 1);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      CHECK(g.has_arc(cycle[i], cycle[i + 1]));
    }
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
}

TEST_CASE("is_topological_order rejects near misses") {
  const Digraph& d1 = fix(FixtureId::kD1);
  CHECK(is_topological_order(d1, std::vector<VertexId>{"v4", "v2", "v3", "v1"}));
  CHECK_FALSE(
      is_topological_order(d1, std::vector<VertexId>{"v1", "v3", "v2", "v4"}));
  CHECK_FALSE(is_topological_order(d1, std::vector<VertexId>{"v4", "v2", "v3"}));
  CHECK_FALSE(is_topological_order(
      d1, std::vector<VertexId>{"v4", "v2", "v3", "v3"}));
  CHECK_FALSE(is_topological_order(
      d1, std::vector<VertexId>{"v4", "v2", "v3", "zz"}));
}

TEST_CASE("longest paths of the reference networks") {
  const std::array<std::vector<VertexId>, 6> expected = {{
      {"v2", "v1"},
      {"v6", "v2", "v1"},
      {"v5", "v2", "v1"},
      {"v5", "v2", "v1"},
      {"v7", "v5", "v2", "v1"},
      {"v7", "v5", "v2", "v1"},
  }};
  for (std::size_t i = 0; i < kAll.size(); ++i) {
    CAPTURE(i);
    Walk w = longest_path(fix(kAll[i]));
    CHECK(w.vertices() == expected[i]);
    CHECK(w.length() == expected[i].size() - 1);
    CHECK(w.is_path());
    validate_walk(fix(kAll[i]), w);
  }
}

TEST_CASE("longest path falls back to exhaustive search on cyclic graphs") {
  Walk w = longest_path(three_cycle());
  CHECK(w.vertices() == std::vector<VertexId>{"a", "b", "c"});
  CHECK(w.length() == 2);

  // Thirteen vertices on a cycle exceed the default exhaustive limit.
  std::vector<Arc> arcs;
  for (int i = 0; i < 13; ++i) {
    arcs.push_back({std::string(1, static_cast<char>('a' + i)),
                    std::string(1, static_cast<char>('a' + (i + 1) % 13))});
  }
  Digraph big_cycle = Digraph::build({}, arcs);
  CHECK(error_code_of([&] { longest_path(big_cycle); }) ==
        ErrorCode::kTooLargeForExhaustive);
  CHECK(longest_path(big_cycle, 13).length() == 12);

  // Acyclic graphs of any size use the DP and never refuse.
  std::vector<Arc> chain;
  for (int i = 0; i < 19; ++i) {
    chain.push_back({"n" + std::to_string(i), "n" + std::to_string(i + 1)});
  }
  CHECK(longest_path(Digraph::build({}, chain)).length() == 19);

  CHECK(longest_path(Digraph()).length() == 0);
}
