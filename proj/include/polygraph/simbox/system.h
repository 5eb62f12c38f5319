// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polygraph/fftyping/params.h"
#include "polygraph/molgraph/graph.h"
#include "polygraph/molgraph/monomer.h"
#include "polygraph/molgraph/topology.h"
#include "polygraph/simbox/box.h"

namespace polygraph {

// Parameters aligned with the system: atoms by index, bonds by bond index,
// bonded terms by position in the topology tables.
struct SystemParameters {
  std::vector<AtomParams> atoms;
  std::vector<BondParams> bonds;
  std::vector<AngleParams> angles;
  std::vector<DihedralParams> dihedrals;
  std::vector<ImproperParams> impropers;
};

struct MolecularSystem {
  MolecularGraph graph;  // positions wrapped into the box
  PeriodicBox box;
  TopologyTables topology;
  SystemParameters params;
  bool parameterized = false;
};

// Atoms whose site_role is set, in index order.
std::vector<ReactionSite> open_sites(const MolecularSystem& system);

// Sum of element masses (amu).
double system_mass(const MolecularSystem& system);

// Wraps every position into [0, L).
void wrap_positions(MolecularSystem& system);

// Throws kUnparameterized unless parameters cover the current topology.
void require_parameterized(const MolecularSystem& system);

}  // namespace polygraph
