#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgi/fixtures.hpp"

namespace dgi {

enum class Verdict { kMatch, kKnownDeviation, kMismatch };
std::string to_string(Verdict v);

// One comparison between a stated value and its recomputation. The id names
// the claim ("Thm3.4.ii.matching", "narrative.center", "Cor3.8.size", ...);
// a failed comparison whose id sits in the fixture's deviations list is
// reported as KNOWN_DEVIATION instead of MISMATCH.
struct ClaimResult {
  std::string fixture;  // D1..D6, or ALL for cross-fixture claims
  std::string id;
  std::string statement;
  std::string stated_value;
  std::string computed_value;
  Verdict verdict = Verdict::kMatch;
};

struct ReproductionResult {
  std::vector<ClaimResult> claims;

  bool has_mismatch() const;
  std::size_t count(Verdict v) const;
};

// Recomputes and compares every claim recorded for one fixture.
ReproductionResult reproduce(FixtureId id);

// All six fixtures in order, then the cross-fixture claims (which digraph
// attains the maximum size and integrities).
ReproductionResult reproduce_all();

std::string render_text(const ReproductionResult& result);
std::string render_json(const ReproductionResult& result);

}  // namespace dgi
