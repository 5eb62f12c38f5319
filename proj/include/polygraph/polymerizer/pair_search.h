// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <vector>

#include "polygraph/polymerizer/reaction.h"
#include "polygraph/simbox/system.h"

namespace polygraph {

struct PairSearchOptions {
  double cutoff = 5.0;                  // angstrom
  int min_topological_separation = 6;  // bond hops, within one component
  // Only classes with priority <= this value are eligible.
  int priority_floor = std::numeric_limits<int>::max();
};

struct CandidatePair {
  int a = -1;  // atom id playing rule.site_a
  int b = -1;  // atom id playing rule.site_b
  int rule = -1;
  double distance = 0.0;
  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct PairSearchResult {
  std::vector<CandidatePair> pairs;  // by (distance, min id, max id)
  int active_priority = 0;           // meaningful when has_candidates
  bool has_candidates = false;       // any geometric candidate in an eligible class
};

// Two open sites are compatible under a rule of the active class when their
// labels match it, they lie within the cutoff, and they are in different
// components or at least min_topological_separation bonds apart. The active
// class is the lowest eligible priority that has a compatible pair. A pair is
// returned when each site is the other's nearest compatible site (ties go to
// the smaller partner id).
PairSearchResult find_reaction_pairs(const MolecularSystem& system, const ReactionRuleSet& rules,
                                     const PairSearchOptions& options);

}  // namespace polygraph
