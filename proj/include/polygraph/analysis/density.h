// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "polygraph/simbox/system.h"

namespace polygraph {

// Total element mass over box volume, g/cm^3 (0 for an empty system).
double density(const MolecularSystem& system);

}  // namespace polygraph
