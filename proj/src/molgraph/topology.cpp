// SPDX-License-Identifier: Apache-2.0
#include "polygraph/molgraph/topology.h"

#include <algorithm>

namespace polygraph {

TopologyTables enumerate_topology(const MolecularGraph& graph, const PlanarPredicate& planar) {
  TopologyTables out;
  const int n = static_cast<int>(graph.size());
  auto id = [&](int index) { return graph.atom_at(index).id; };

  for (int j = 0; j < n; ++j) {
    const auto nb = graph.neighbors(j);
    for (std::size_t x = 0; x < nb.size(); ++x) {
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        int a = id(nb[x].index);
        int c = id(nb[y].index);
        if (a > c) std::swap(a, c);
        out.angles.push_back({a, id(j), c});
      }
    }
    if (planar && nb.size() == 3 && planar(j)) {
      std::array<int, 3> others{id(nb[0].index), id(nb[1].index), id(nb[2].index)};
      std::sort(others.begin(), others.end());
      out.impropers.push_back({id(j), others[0], others[1], others[2]});
    }
  }

  for (const Bond& bond : graph.bonds()) {
    const int j = graph.index_of(bond.a);
    const int k = graph.index_of(bond.b);
    for (const Neighbor& ni : graph.neighbors(j)) {
      if (ni.index == k) continue;
      for (const Neighbor& nl : graph.neighbors(k)) {
        if (nl.index == j || nl.index == ni.index) continue;
        std::array<int, 4> fwd{id(ni.index), id(j), id(k), id(nl.index)};
        std::array<int, 4> rev{fwd[3], fwd[2], fwd[1], fwd[0]};
        out.dihedrals.push_back(std::min(fwd, rev));
      }
    }
  }

  std::sort(out.angles.begin(), out.angles.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a[1], a[0], a[2]) < std::tie(b[1], b[0], b[2]);
            });
  std::sort(out.dihedrals.begin(), out.dihedrals.end());
  std::sort(out.impropers.begin(), out.impropers.end());
  return out;
}

}  // namespace polygraph
