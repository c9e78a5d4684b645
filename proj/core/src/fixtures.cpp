#include "dgi/fixtures.hpp"

#include <array>
#include <utility>

#include "dgi/error.hpp"

namespace dgi {
namespace {

Digraph d1_graph() {
  return Digraph::build({"v1", "v2", "v3", "v4"},
                        {{"v2", "v1"}, {"v2", "v3"}, {"v4", "v1"}, {"v4", "v3"}});
}

Digraph d2_graph() {
  return Digraph::build({"v1", "v2", "v3", "v4", "v6"},
                        {{"v2", "v1"},
                         {"v2", "v3"},
                         {"v4", "v1"},
                         {"v4", "v3"},
                         {"v6", "v1"},
                         {"v6", "v2"},
                         {"v6", "v3"}});
}

Digraph d3_graph() {
  return Digraph::build({"v1", "v2", "v3", "v4", "v5"},
                        {{"v2", "v1"},
                         {"v2", "v3"},
                         {"v4", "v1"},
                         {"v4", "v3"},
                         {"v5", "v2"},
                         {"v5", "v3"},
                         {"v5", "v4"}});
}

Digraph d4_graph() {
  return Digraph::build({"v1", "v2", "v3", "v4", "v5", "v6"},
                        {{"v2", "v1"},
                         {"v2", "v3"},
                         {"v4", "v1"},
                         {"v4", "v3"},
                         {"v5", "v2"},
                         {"v5", "v3"},
                         {"v5", "v4"},
                         {"v6", "v1"},
                         {"v6", "v2"},
                         {"v6", "v3"}});
}

Digraph d5_graph() {
  return Digraph::build({"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
                        {{"v2", "v1"},
                         {"v2", "v3"},
                         {"v4", "v1"},
                         {"v4", "v3"},
                         {"v5", "v2"},
                         {"v5", "v3"},
                         {"v5", "v4"},
                         {"v6", "v1"},
                         {"v6", "v2"},
                         {"v6", "v3"},
                         {"v7", "v5"},
                         {"v7", "v6"}});
}

Digraph d6_graph() {
  return Digraph::build({"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
                        {{"v2", "v1"},
                         {"v2", "v3"},
                         {"v4", "v1"},
                         {"v4", "v3"},
                         {"v5", "v1"},
                         {"v5", "v2"},
                         {"v5", "v3"},
                         {"v5", "v4"},
                         {"v6", "v1"},
                         {"v6", "v2"},
                         {"v6", "v3"},
                         {"v6", "v4"},
                         {"v7", "v5"},
                         {"v7", "v6"}});
}

NetworkFixture make_d1() {
  FixtureExpectations e;
  e.order = 4;
  e.size_prose = 4;
  e.partite_number = 2;
  e.complete_partite_claimed = true;
  e.partition = {{"v1", "v3"}, {"v2", "v4"}};
  e.matching_number = 2;
  e.perfect_matching_claimed = true;
  e.half_arcs_wording = true;  // |M| = 4/2 = 2, consistent here
  e.matching_witness = {{"v2", "v1"}, {"v4", "v3"}};
  e.independence_number = 2;
  e.independent_witness = {"v2", "v4"};
  e.chromatic_number = 2;
  e.domination_number = 2;
  e.dominating_witness = {"v2", "v4"};
  e.longest_path_length = 1;
  e.radius = 1;
  e.diameter = 1;
  e.center_claimed_empty = true;
  e.periphery = {"v2", "v4"};
  e.topological_order = {"v4", "v2", "v3", "v1"};
  e.unreachable = {"v2", "v4"};
  return {"D1", d1_graph(), std::move(e), {"narrative.center"}};
}

NetworkFixture make_d2() {
  FixtureExpectations e;
  e.order = 5;
  e.size_prose = 7;
  e.partite_number = 3;
  e.partition = {{"v1", "v3"}, {"v2"}, {"v4", "v6"}};
  e.matching_number = 2;
  e.matching_witness = {{"v6", "v1"}, {"v4", "v3"}};
  e.independence_number = 2;
  e.independent_witness = {"v2", "v4"};
  e.chromatic_number = 3;
  e.domination_number = 2;
  e.dominating_witness = {"v4", "v6"};
  e.longest_path_length = 2;
  e.radius = 1;
  e.diameter = 1;
  e.center_claimed_empty = true;
  e.periphery = {"v2", "v4", "v6"};
  e.topological_order = {"v6", "v4", "v2", "v3", "v1"};
  e.unreachable = {"v4", "v6"};
  return {"D2", d2_graph(), std::move(e), {"narrative.center"}};
}

NetworkFixture make_d3() {
  FixtureExpectations e;
  e.order = 5;
  e.size_prose = 7;
  e.partite_number = 3;
  e.partition = {{"v1", "v3"}, {"v2", "v4"}, {"v5"}};
  e.matching_number = 2;
  e.matching_witness = {{"v2", "v1"}, {"v4", "v3"}};
  e.independence_number = 2;
  e.independent_witness = {"v2", "v4"};
  e.chromatic_number = 3;
  e.spanning_tree_exists = true;
  e.tree_root = "v5";
  e.tree_unique_claimed = true;  // six trees exist; see the deviation entry
  e.tree_witness = {{"v2", "v1"}, {"v5", "v2"}, {"v5", "v3"}, {"v5", "v4"}};
  e.tree_length = 4;
  e.domination_number = 2;
  e.dominating_witness = {"v4", "v5"};
  e.longest_path_length = 2;
  e.radius = 1;
  e.diameter = 2;
  e.center = {"v2", "v4"};
  e.periphery = {"v5"};
  e.closure_additions = {{"v5", "v1"}};
  e.topological_order = {"v5", "v4", "v2", "v3", "v1"};
  e.unreachable = {"v5"};
  return {"D3", d3_graph(), std::move(e), {"Thm3.3.v.unique"}};
}

NetworkFixture make_d4() {
  FixtureExpectations e;
  e.order = 6;
  e.size_prose = 10;
  e.partite_number = 3;
  e.partition = {{"v1", "v3"}, {"v2", "v4"}, {"v5", "v6"}};
  e.matching_number = 3;
  e.perfect_matching_claimed = true;
  e.half_arcs_wording = true;  // claims |M| = 10/2; the witness has 3 arcs
  e.matching_witness = {{"v2", "v1"}, {"v5", "v4"}, {"v6", "v3"}};
  e.independence_number = 2;
  e.independent_witness = {"v2", "v4"};
  e.chromatic_number = 3;
  e.domination_number = 2;
  e.dominating_witness = {"v5", "v6"};
  e.longest_path_length = 2;
  e.radius = 1;
  e.diameter = 2;
  e.center = {"v2", "v4", "v6"};
  e.periphery = {"v5"};
  e.closure_additions = {{"v5", "v1"}};
  e.topological_order = {"v6", "v5", "v4", "v2", "v3", "v1"};
  e.unreachable = {"v5", "v6"};
  return {"D4", d4_graph(), std::move(e), {"Thm3.4.ii.half-arcs"}};
}

NetworkFixture make_d5() {
  FixtureExpectations e;
  e.order = 7;
  e.size_prose = 12;
  e.partite_number = 3;
  e.partition = {{"v1", "v3"}, {"v2", "v4", "v7"}, {"v5", "v6"}};
  e.matching_number = 3;
  e.matching_witness = {{"v2", "v1"}, {"v5", "v4"}, {"v6", "v3"}};
  e.independence_number = 3;
  e.independent_witness = {"v2", "v4", "v7"};
  e.chromatic_number = 3;
  e.spanning_tree_exists = true;
  e.tree_root = "v7";
  e.tree_witness = {{"v5", "v2"}, {"v5", "v3"}, {"v5", "v4"},
                    {"v6", "v1"}, {"v7", "v5"}, {"v7", "v6"}};
  e.tree_length = 6;
  e.tree_depth_limit = 2;  // "to all other submanifolds ... at most two-step"
  e.domination_number = 3;
  e.dominating_witness = {"v5", "v6", "v7"};
  e.longest_path_length = 3;
  e.radius = 1;
  e.diameter = 2;
  e.center = {"v2", "v4", "v6"};
  e.periphery = {"v5", "v7"};
  e.closure_additions = {
      {"v5", "v1"}, {"v7", "v1"}, {"v7", "v2"}, {"v7", "v3"}, {"v7", "v4"}};
  e.topological_order = {"v7", "v6", "v5", "v4", "v2", "v3", "v1"};
  e.unreachable = {"v7"};
  return {"D5", d5_graph(), std::move(e), {}};
}

NetworkFixture make_d6() {
  FixtureExpectations e;
  e.order = 7;
  e.size_prose = 12;  // the arc list and figure both carry 14 arcs
  e.partite_number = 3;
  e.partition = {{"v1", "v3"}, {"v2", "v4", "v7"}, {"v5", "v6"}};
  e.matching_number = 3;
  e.matching_witness = {{"v2", "v1"}, {"v5", "v4"}, {"v6", "v3"}};
  e.independence_number = 3;
  e.independent_witness = {"v2", "v4", "v7"};
  e.chromatic_number = 3;
  e.spanning_tree_exists = true;
  e.tree_root = "v7";
  e.tree_witness = {{"v5", "v2"}, {"v5", "v3"}, {"v5", "v4"},
                    {"v6", "v1"}, {"v7", "v5"}, {"v7", "v6"}};
  e.tree_length = 6;
  e.domination_number = 2;
  e.dominating_witness = {"v5", "v7"};
  e.longest_path_length = 3;
  e.radius = 1;
  e.diameter = 2;
  e.center = {"v2", "v4", "v5", "v6"};
  e.periphery = {"v7"};
  e.closure_additions = {{"v7", "v1"}, {"v7", "v2"}, {"v7", "v3"}, {"v7", "v4"}};
  e.topological_order = {"v7", "v6", "v5", "v4", "v2", "v3", "v1"};
  e.unreachable = {"v7"};
  return {"D6", d6_graph(), std::move(e), {"size.arcs"}};
}

const std::array<NetworkFixture, 6>& fixture_table() {
  static const std::array<NetworkFixture, 6> table = {
      make_d1(), make_d2(), make_d3(), make_d4(), make_d5(), make_d6()};
  return table;
}

}  // namespace

std::span<const FixtureId> all_fixture_ids() {
  static const std::array<FixtureId, 6> ids = {FixtureId::kD1, FixtureId::kD2,
                                               FixtureId::kD3, FixtureId::kD4,
                                               FixtureId::kD5, FixtureId::kD6};
  return ids;
}

std::string_view fixture_name(FixtureId id) {
  return fixture(id).name;
}

FixtureId fixture_id(std::string_view name) {
  for (FixtureId id : all_fixture_ids()) {
    if (fixture(id).name == name) return id;
  }
  throw Error(ErrorCode::kUnknownFixture,
              "unknown fixture '" + std::string(name) + "' (expected D1..D6)");
}

const NetworkFixture& fixture(FixtureId id) {
  return fixture_table()[static_cast<std::size_t>(id)];
}

Digraph generate_network(std::span<const SubmanifoldClassId> classes,
                         const ArcPolicy& policy) {
  if (const auto* by_fixture = std::get_if<FixturePolicy>(&policy)) {
    return fixture(by_fixture->id).digraph;
  }
  return rules_network(classes);
}

}  // namespace dgi
