// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polygraph/fftyping/params.h"
#include "polygraph/molgraph/graph.h"

namespace polygraph {

inline constexpr int kFragmentSchemaVersion = 1;

// A parameterized (or, for export, bare) fragment. Atom ids equal indices.
struct FragmentSpec {
  std::string name;
  std::string provenance;
  MolecularGraph graph;
  ForceFieldParamSet params;
};

// Throws kConfig naming the first term that lacks parameters or violates an
// invariant.
void check_fragment_complete(const FragmentSpec& fragment);

// Accepts a single fragment document or a library {"fragments": [...]}.
std::vector<FragmentSpec> fragments_from_json(std::string_view text,
                                              std::string_view source = "<memory>");
std::vector<FragmentSpec> load_fragments(const std::string& path);

std::string fragment_to_json(const FragmentSpec& fragment, bool include_params = true);
std::string fragment_library_to_json(const std::vector<FragmentSpec>& fragments,
                                     bool include_params = true);

// Reindexes a graph so atom ids become 0..n-1 (in index order).
MolecularGraph reindexed(const MolecularGraph& graph);

}  // namespace polygraph
