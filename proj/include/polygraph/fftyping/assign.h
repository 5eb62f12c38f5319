// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "polygraph/fftyping/lookup_table.h"
#include "polygraph/molgraph/graph.h"
#include "polygraph/molgraph/topology.h"
#include "polygraph/simbox/system.h"

namespace polygraph {

struct ParameterAssignment {
  TopologyTables topology;
  SystemParameters params;
};

// Labels every atom at the table depth and maps every term through the
// table. Throws MissingEnvironmentError for the first unmatched key.
ParameterAssignment assign_parameters(const MolecularGraph& graph, const LookupTable& table);

// Replaces topology and parameters of the system and copies charges onto the
// atoms.
void assign_parameters(MolecularSystem& system, const LookupTable& table);

// "C(C,H,H,N)": element followed by sorted neighbor elements.
std::string element_context(const MolecularGraph& graph, int index);

}  // namespace polygraph
