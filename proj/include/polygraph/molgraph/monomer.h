// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polygraph/molgraph/graph.h"

namespace polygraph {

struct ReactionSite {
  int atom = -1;  // atom id in the template graph
  std::string type;
};

struct MonomerTemplate {
  std::string name;
  std::string smiles;
  MolecularGraph graph;  // explicit hydrogens, site_role set on site atoms
  std::vector<ReactionSite> reaction_sites;
};

inline constexpr int kMonomerSchemaVersion = 1;

// Builds a template from SMILES: hydrogens are added, sites are tagged.
MonomerTemplate make_monomer(std::string name, std::string smiles,
                             std::vector<ReactionSite> sites);

MonomerTemplate monomer_from_json(std::string_view text, std::string_view source = "<memory>");
MonomerTemplate load_monomer(const std::string& path);
std::string monomer_to_json(const MonomerTemplate& monomer);

}  // namespace polygraph
