// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polygraph/fftyping/composites.h"
#include "polygraph/fftyping/fragment.h"
#include "polygraph/molgraph/graph.h"

namespace polygraph::demoff {

// Deterministic GAFF-flavored parameters that depend only on each atom's
// element, bond orders and neighbor elements. Stands in for an external
// generator when producing fragment files for tests and examples.
FragmentSpec parameterize(const MolecularGraph& graph, const std::string& name);

std::vector<FragmentSpec> parameterize_all(const std::vector<Composite>& composites);

enum class Hybridization { kSp, kSp2, kSp3 };
Hybridization hybridization(const MolecularGraph& graph, int index);

// Reference X-H lengths (angstrom) used by the demo bond table.
double hydrogen_bond_length(const std::string& heavy_symbol);

}  // namespace polygraph::demoff
