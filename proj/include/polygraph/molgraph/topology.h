// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "polygraph/molgraph/graph.h"

namespace polygraph {

// Bonded-term tuples by atom id.
// angles: (i, j, k) with j the vertex and i < k.
// dihedrals: (i, j, k, l) with the id-smaller orientation of the path.
// impropers: (center, i, j, k) with i < j < k.
struct TopologyTables {
  std::vector<std::array<int, 3>> angles;
  std::vector<std::array<int, 4>> dihedrals;
  std::vector<std::array<int, 4>> impropers;
};

// Called with an atom index; true marks a planar 3-coordinate center.
using PlanarPredicate = std::function<bool(int index)>;

TopologyTables enumerate_topology(const MolecularGraph& graph,
                                  const PlanarPredicate& planar = nullptr);

}  // namespace polygraph
