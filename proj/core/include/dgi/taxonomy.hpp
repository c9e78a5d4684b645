#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgi/digraph.hpp"

namespace dgi {

// The submanifold taxonomy is purely symbolic. A class is a list of
// distribution slots; slant slots carry a free angle symbol. The only
// distinguished angle values are 0 and pi/2, and they never survive
// normalization: they rewrite the slot kind instead.

enum class SlotKind { kInvariant, kAntiInvariant, kSlant };

struct Slot {
  SlotKind kind = SlotKind::kInvariant;
  std::string angle;  // nonempty iff kind == kSlant, e.g. "theta1"

  friend bool operator==(const Slot&, const Slot&) = default;
};

enum class SubmanifoldClassId {
  kHolomorphic,
  kCr,
  kAntiInvariant,
  kSlant,
  kSemiSlant,
  kHemiSlant,
  kBiSlant,
};

struct SubmanifoldClass {
  SubmanifoldClassId id = SubmanifoldClassId::kHolomorphic;
  std::string name;          // e.g. "HOLOMORPHIC"
  VertexId vertex_label;     // fixture vertex, "v1".."v7"
  std::vector<Slot> structure;
};

const std::vector<SubmanifoldClass>& submanifold_classes();
const SubmanifoldClass& submanifold_class(SubmanifoldClassId id);
std::optional<SubmanifoldClassId> class_by_name(std::string_view name);
std::optional<SubmanifoldClassId> class_by_vertex_label(std::string_view label);

// A degeneration condition on one slot of the source structure.
struct Condition {
  enum class Kind { kDistributionZero, kAngleZero, kAngleRightAngle };

  Kind kind = Kind::kDistributionZero;
  std::size_t slot = 0;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct SpecializationRule {
  SubmanifoldClassId source;
  std::vector<Condition> conditions;  // one or two, conjunction
  SubmanifoldClassId target;
  std::string citation;  // human-readable degeneration, e.g. "theta = pi/2"
};

// The complete rule list; every entry satisfies the normalization invariant
// (see normalized_specialization). Stable order: by source class, then by
// the order the degenerations are usually stated.
const std::vector<SpecializationRule>& rule_base();

// Applies the rule's conditions to its source structure and normalizes:
// dropped zero slots, SLANT(0) -> INVARIANT, SLANT(pi/2) -> ANTI_INVARIANT,
// like invariant/anti-invariant slots merged, canonical slot order
// (invariant, anti-invariant, then slant slots).
std::vector<Slot> normalized_specialization(const SpecializationRule& rule);

// Maps a normalized structure back to the class carrying it, ignoring angle
// symbol names (a slant slot matches any slant slot).
std::optional<SubmanifoldClassId> classify_structure(std::span<const Slot> slots);

// normalized_specialization(rule) is exactly the target's structure.
bool rule_is_consistent(const SpecializationRule& rule);

// Network of the given classes under the rule base: vertices in the given
// order (fixture labels), one arc per source/target pair with a rule.
Digraph rules_network(std::span<const SubmanifoldClassId> classes);

// Derivability view of any network whose vertices are class labels:
// underivable = in-degree 0, non-generative = out-degree 0, derivers =
// in-neighbors, closure = everything reachable.
struct DerivationReport {
  std::vector<VertexId> underivable;     // insertion order
  std::vector<VertexId> non_generative;  // insertion order
  std::vector<std::pair<VertexId, std::vector<VertexId>>> derivers;
  std::vector<std::pair<VertexId, std::vector<VertexId>>> closure;
};

DerivationReport derivation_report(const Digraph& g);

}  // namespace dgi
