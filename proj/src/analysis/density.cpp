// SPDX-License-Identifier: Apache-2.0
#include "polygraph/analysis/density.h"

#include "polygraph/simbox/pack.h"

namespace polygraph {

double density(const MolecularSystem& system) {
  if (system.graph.empty()) return 0.0;
  return system_mass(system) / system.box.volume() * kAmuPerCubicAngstromToGramPerCc;
}

}  // namespace polygraph
