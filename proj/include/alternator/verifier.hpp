#pragma once

// Exhaustive verification of a strategy tree: every world the tree's start
// state allows is played out, and every unreachable marker is checked against
// the knowledge-state semantics.

#include <string>
#include <vector>

#include "alternator/strategy.hpp"

namespace alternator {

struct VerificationFailure {
  World world;
  std::string description;
};

struct PathStringViolation {
  World world;
  std::string outcomes;
};

struct VerificationReport {
  bool valid = true;
  WeighingsCount max_depth = 0;
  std::size_t worlds_checked = 0;
  std::vector<VerificationFailure> failures;
  std::vector<PathStringViolation> path_string_violations;
};

struct VerifyOptions {
  int threads = 1;
};

// Throws std::invalid_argument if the tree is structurally invalid.
//
// For an unknown start state both (i, f) and (i, r) are played; when the two
// runs give identical transcripts (coin i never reaches a pan) they count as a
// single world.
VerificationReport verify(const StrategyTree& tree, VerifyOptions options = {});

// Valid and no deeper than min_weighings_bound for the tree's coins and state.
bool verify_against_bound(const StrategyTree& tree);

std::string format_report(const VerificationReport& report);

}  // namespace alternator
