// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polygraph/molgraph/graph.h"
#include "polygraph/molgraph/monomer.h"
#include "polygraph/polymerizer/reaction.h"

namespace polygraph {

struct CompositeOptions {
  bool include_monomers = false;
  // Extend a dimer whose site label survives the reaction by one more
  // reaction on that site.
  bool trimers = true;
  // When > 0, additionally enumerate every monomer as the center of a
  // reaction tree whose sites within coverage_depth + 1 bonds of the center
  // take every reachable state. Pass the lookup-table depth.
  int coverage_depth = 0;
  // Adds a hydrogen-capped state for each enumerated site (carve + cap).
  bool capped_states = false;
  std::size_t max_composites = 20000;
};

struct Composite {
  std::string name;
  MolecularGraph graph;  // ids 0..n-1, monomer_instance numbered from 1
};

// Composites are deduplicated up to WL equivalence and returned in
// generation order.
std::vector<Composite> enumerate_composites(const std::vector<MonomerTemplate>& templates,
                                            const ReactionRuleSet& rules,
                                            const CompositeOptions& options = {});

// Appends a copy of `part` to `target`, tagging atoms with `instance`.
// Returns the id offset map: new id of part atom index i is result[i].
std::vector<int> append_graph(MolecularGraph& target, const MolecularGraph& part, int instance);

}  // namespace polygraph
