// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "polygraph/molgraph/monomer.h"
#include "polygraph/simbox/box.h"
#include "polygraph/simbox/system.h"

namespace polygraph {

inline constexpr double kAmuPerCubicAngstromToGramPerCc = 1.66054;
inline constexpr double kDefaultInitialDensity = 0.3;  // g/cm^3

struct PackOptions {
  double min_separation = 2.0;  // angstrom, between atoms of different copies
  int max_attempts = 10000;     // per monomer copy
  std::uint64_t seed = 1;
};

// Cubic box holding the given copies at the requested density.
PeriodicBox box_for_density(const std::vector<MonomerTemplate>& templates,
                            const std::vector<int>& counts, double density_g_cm3);

// Places counts[t] copies of each template with a uniform random rotation
// and translation. Atom ids and monomer instances are numbered from 1 in
// placement order. Templates without geometry are embedded first.
MolecularSystem pack(const std::vector<MonomerTemplate>& templates, const std::vector<int>& counts,
                     const PeriodicBox& box, const PackOptions& options = {});

}  // namespace polygraph
