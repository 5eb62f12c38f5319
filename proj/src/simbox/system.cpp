// SPDX-License-Identifier: Apache-2.0
#include "polygraph/simbox/system.h"

#include "polygraph/core/error.h"

namespace polygraph {

std::vector<ReactionSite> open_sites(const MolecularSystem& system) {
  std::vector<ReactionSite> out;
  for (const Atom& a : system.graph.atoms())
    if (!a.site_role.empty()) out.push_back({a.id, a.site_role});
  return out;
}

double system_mass(const MolecularSystem& system) { return total_element_mass(system.graph); }

void wrap_positions(MolecularSystem& system) {
  for (int i = 0; i < static_cast<int>(system.graph.size()); ++i) {
    Atom& a = system.graph.atom_at(i);
    a.position = system.box.wrap(a.position);
  }
}

void require_parameterized(const MolecularSystem& s) {
  const auto& p = s.params;
  if (!s.parameterized || p.atoms.size() != s.graph.size() || p.bonds.size() != s.graph.bonds().size() ||
      p.angles.size() != s.topology.angles.size() || p.dihedrals.size() != s.topology.dihedrals.size() ||
      p.impropers.size() != s.topology.impropers.size())
    throw Error(ErrorCode::kUnparameterized, "system is not fully parameterized");
}

}  // namespace polygraph
