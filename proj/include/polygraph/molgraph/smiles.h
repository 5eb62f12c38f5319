// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "polygraph/molgraph/graph.h"

namespace polygraph {

// Supported subset: organic-subset and bracket atoms (element, H count,
// charge), branches, ring closures (digits and %nn), bond symbols - = # :,
// aromatic lowercase atoms and '.' separators. Stereo marks and isotopes are
// rejected. Atom ids follow the order of appearance; hydrogens stay implicit.
MolecularGraph parse_smiles(std::string_view text);

// Depth-first serialization; parse_smiles(write_smiles(g)) is isomorphic to g.
std::string write_smiles(const MolecularGraph& graph);

// Materializes implicit and bracket hydrogens as explicit H atoms appended
// after the existing atoms (in order of their heavy atom). Idempotent.
MolecularGraph add_implicit_hydrogens(const MolecularGraph& graph);

}  // namespace polygraph
