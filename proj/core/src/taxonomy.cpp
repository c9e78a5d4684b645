#include "dgi/taxonomy.hpp"

#include <algorithm>
#include <set>

#include "dgi/connectivity.hpp"

namespace dgi {

namespace {

Slot inv() { return {SlotKind::kInvariant, ""}; }
Slot anti() { return {SlotKind::kAntiInvariant, ""}; }
Slot slant(std::string angle) { return {SlotKind::kSlant, std::move(angle)}; }

std::vector<SubmanifoldClass> make_classes() {
  return {
      {SubmanifoldClassId::kHolomorphic, "HOLOMORPHIC", "v1", {inv()}},
      {SubmanifoldClassId::kCr, "CR", "v2", {inv(), anti()}},
      {SubmanifoldClassId::kAntiInvariant, "ANTI_INVARIANT", "v3", {anti()}},
      {SubmanifoldClassId::kSlant, "SLANT", "v4", {slant("theta")}},
      {SubmanifoldClassId::kSemiSlant, "SEMI_SLANT", "v5", {inv(), slant("theta")}},
      {SubmanifoldClassId::kHemiSlant, "HEMI_SLANT", "v6", {anti(), slant("theta")}},
      {SubmanifoldClassId::kBiSlant, "BI_SLANT", "v7",
       {slant("theta1"), slant("theta2")}},
  };
}

using CK = Condition::Kind;
using CID = SubmanifoldClassId;

Condition zero(std::size_t slot) { return {CK::kDistributionZero, slot}; }
Condition angle0(std::size_t slot) { return {CK::kAngleZero, slot}; }
Condition angle90(std::size_t slot) { return {CK::kAngleRightAngle, slot}; }

std::vector<SpecializationRule> make_rules() {
  return {
      // CR: [invariant D, anti-invariant D_perp]
      {CID::kCr, {zero(1)}, CID::kHolomorphic, "D_perp = {0}"},
      {CID::kCr, {zero(0)}, CID::kAntiInvariant, "D = {0}"},
      // SLANT: [slant(theta)]
      {CID::kSlant, {angle0(0)}, CID::kHolomorphic, "theta = 0"},
      {CID::kSlant, {angle90(0)}, CID::kAntiInvariant, "theta = pi/2"},
      // SEMI_SLANT: [invariant D, slant(theta) D_theta]
      {CID::kSemiSlant, {zero(0)}, CID::kSlant, "D = {0}"},
      {CID::kSemiSlant, {zero(1)}, CID::kHolomorphic, "D_theta = {0}"},
      {CID::kSemiSlant, {angle90(1)}, CID::kCr, "theta = pi/2"},
      {CID::kSemiSlant, {zero(0), angle90(1)}, CID::kAntiInvariant,
       "D = {0} and theta = pi/2"},
      // HEMI_SLANT: [anti-invariant D_perp, slant(theta) D_theta]
      {CID::kHemiSlant, {zero(0)}, CID::kSlant, "D_perp = {0}"},
      {CID::kHemiSlant, {zero(1)}, CID::kAntiInvariant, "D_theta = {0}"},
      {CID::kHemiSlant, {angle0(1)}, CID::kCr, "theta = 0"},
      {CID::kHemiSlant, {zero(0), angle0(1)}, CID::kHolomorphic,
       "D_perp = {0} and theta = 0"},
      // BI_SLANT: [slant(theta1), slant(theta2)]
      {CID::kBiSlant, {zero(1)}, CID::kSlant, "D_theta2 = {0}"},
      {CID::kBiSlant, {zero(0)}, CID::kSlant, "D_theta1 = {0}"},
      {CID::kBiSlant, {angle0(0), angle0(1)}, CID::kHolomorphic,
       "theta1 = 0 and theta2 = 0"},
      {CID::kBiSlant, {angle90(0), angle90(1)}, CID::kAntiInvariant,
       "theta1 = pi/2 and theta2 = pi/2"},
      {CID::kBiSlant, {angle90(0), angle0(1)}, CID::kCr,
       "theta1 = pi/2 and theta2 = 0"},
      {CID::kBiSlant, {angle90(0)}, CID::kHemiSlant, "theta1 = pi/2"},
      {CID::kBiSlant, {angle0(1)}, CID::kSemiSlant, "theta2 = 0"},
  };
}

}  // namespace

const std::vector<SubmanifoldClass>& submanifold_classes() {
  static const std::vector<SubmanifoldClass> classes = make_classes();
  return classes;
}

const SubmanifoldClass& submanifold_class(SubmanifoldClassId id) {
  for (const SubmanifoldClass& c : submanifold_classes()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::kUnknownVertex, "unknown submanifold class");
}

std::optional<SubmanifoldClassId> class_by_name(std::string_view name) {
  for (const SubmanifoldClass& c : submanifold_classes()) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

std::optional<SubmanifoldClassId> class_by_vertex_label(std::string_view label) {
  for (const SubmanifoldClass& c : submanifold_classes()) {
    if (c.vertex_label == label) return c.id;
  }
  return std::nullopt;
}

const std::vector<SpecializationRule>& rule_base() {
  static const std::vector<SpecializationRule> rules = make_rules();
  return rules;
}

std::vector<Slot> normalized_specialization(const SpecializationRule& rule) {
  std::vector<Slot> slots = submanifold_class(rule.source).structure;
  std::vector<bool> dropped(slots.size(), false);
  for (const Condition& c : rule.conditions) {
    if (c.slot >= slots.size()) {
      throw Error(ErrorCode::kUnknownVertex,
                  "condition refers to slot " + std::to_string(c.slot) +
                      " outside the source structure");
    }
    switch (c.kind) {
      case Condition::Kind::kDistributionZero:
        dropped[c.slot] = true;
        break;
      case Condition::Kind::kAngleZero:
        slots[c.slot] = inv();
        break;
      case Condition::Kind::kAngleRightAngle:
        slots[c.slot] = anti();
        break;
    }
  }

  // Normalize: drop zero slots, merge duplicate invariant/anti-invariant
  // slots, order invariant < anti-invariant < slant (slant keeps slot order).
  std::vector<Slot> keep;
  bool have_inv = false, have_anti = false;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (dropped[i]) continue;
    if (slots[i].kind == SlotKind::kInvariant) {
      have_inv = true;
    } else if (slots[i].kind == SlotKind::kAntiInvariant) {
      have_anti = true;
    } else {
      keep.push_back(slots[i]);
    }
  }
  std::vector<Slot> result;
  if (have_inv) result.push_back(inv());
  if (have_anti) result.push_back(anti());
  for (Slot& s : keep) result.push_back(std::move(s));
  return result;
}

std::optional<SubmanifoldClassId> classify_structure(std::span<const Slot> slots) {
  auto kind_signature = [](std::span<const Slot> s) {
    std::vector<SlotKind> kinds;
    for (const Slot& slot : s) kinds.push_back(slot.kind);
    return kinds;
  };
  std::vector<SlotKind> signature = kind_signature(slots);
  for (const SubmanifoldClass& c : submanifold_classes()) {
    if (kind_signature(c.structure) == signature) return c.id;
  }
  return std::nullopt;
}

bool rule_is_consistent(const SpecializationRule& rule) {
  return classify_structure(normalized_specialization(rule)) == rule.target;
}

Digraph rules_network(std::span<const SubmanifoldClassId> classes) {
  std::set<SubmanifoldClassId> members(classes.begin(), classes.end());
  std::vector<VertexId> vertices;
  for (SubmanifoldClassId id : classes) {
    vertices.push_back(submanifold_class(id).vertex_label);
  }
  std::vector<Arc> arcs;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (SubmanifoldClassId source : classes) {
    for (const SpecializationRule& rule : rule_base()) {
      if (rule.source != source || !members.contains(rule.target)) continue;
      Arc arc{submanifold_class(rule.source).vertex_label,
              submanifold_class(rule.target).vertex_label};
      if (seen.emplace(arc.tail, arc.head).second) {
        arcs.push_back(arc);
      }
    }
  }
  return Digraph::build(vertices, arcs);
}

DerivationReport derivation_report(const Digraph& g) {
  DerivationReport report;
  for (const VertexId& v : g.vertices()) {
    if (g.in_degree(v) == 0) report.underivable.push_back(v);
    if (g.out_degree(v) == 0) report.non_generative.push_back(v);
    std::vector<VertexId> derivers = g.in_neighbors(v);
    std::sort(derivers.begin(), derivers.end());
    report.derivers.emplace_back(v, std::move(derivers));
  }
  Digraph closure = transitive_closure(g);
  for (const VertexId& v : g.vertices()) {
    std::vector<VertexId> reach = closure.out_neighbors(v);
    std::sort(reach.begin(), reach.end());
    report.closure.emplace_back(v, std::move(reach));
  }
  return report;
}

}  // namespace dgi
