// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "polygraph/molgraph/graph.h"

namespace polygraph {

// Rough 3D coordinates from connectivity alone: breadth-first placement at
// covalent bond lengths followed by a short spring/repulsion relaxation.
// Adequate for packing; not a conformer generator.
void crude_embed(MolecularGraph& graph, std::uint64_t seed);

}  // namespace polygraph
