// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polygraph/core/hash128.h"
#include "polygraph/molgraph/graph.h"

namespace polygraph {

struct WLLabel {
  Digest128 value;
  int depth = 0;

  friend bool operator==(const WLLabel&, const WLLabel&) = default;
};

inline constexpr int kDefaultWLDepth = 4;

// Labels for every depth 0..iterations; history[k][i] is atom index i at depth k.
std::vector<std::vector<Digest128>> wl_history(const MolecularGraph& graph, int iterations);

// Depth-`iterations` labels per atom index.
std::vector<WLLabel> wl_refine(const MolecularGraph& graph, int iterations);

// Number of classes in a label vector.
int count_classes(const std::vector<Digest128>& labels);

struct WLConvergence {
  int depth = 0;
  bool converged = true;
};

// Smallest k <= max_iter whose partition equals the one at k + 1.
WLConvergence wl_converged_depth(const MolecularGraph& graph, int max_iter);

}  // namespace polygraph
