// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "graph_oracles.h"
#include "polygraph/fftyping/wl.h"
#include "test_support.h"

namespace polygraph {
namespace {

using testing::AutomorphismOracle;
using testing::random_molecular_graph;
using testing::refines;
using testing::same_partition;

std::vector<Digest128> converged(const MolecularGraph& g) {
  std::vector<Digest128> out;
  for (const WLLabel& l : wl_refine(g, static_cast<int>(g.size()))) out.push_back(l.value);
  return out;
}

TEST(WL, TreesMatchAutomorphismOrbits) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const MolecularGraph g = random_molecular_graph(rng, 2 + static_cast<int>(rng.below(9)), true);
    const std::vector<int> orbits = AutomorphismOracle(g).orbits();
    EXPECT_TRUE(same_partition(converged(g), orbits)) << "trial " << trial;
  }
}

TEST(WL, NeverFinerThanOrbitsOnCyclicGraphs) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const MolecularGraph g = random_molecular_graph(rng, 3 + static_cast<int>(rng.below(8)), false);
    const std::vector<int> orbits = AutomorphismOracle(g).orbits();
    // Every orbit lies inside one WL class.
    EXPECT_TRUE(refines(orbits, converged(g))) << "trial " << trial;
  }
}

TEST(WL, LabelsDoNotDependOnAtomOrder) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const MolecularGraph g = random_molecular_graph(rng, 8, false);
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    MolecularGraph h;
    std::vector<int> hid;
    for (int k : perm) {
      Atom a = g.atom_at(k);
      a.id = -1;
      hid.push_back(h.add_atom(a));
    }
    std::vector<int> where(g.size());
    for (std::size_t k = 0; k < perm.size(); ++k) where[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
    for (const Bond& b : g.bonds())
      h.add_bond(hid[static_cast<std::size_t>(where[static_cast<std::size_t>(g.index_of(b.a))])],
                 hid[static_cast<std::size_t>(where[static_cast<std::size_t>(g.index_of(b.b))])], b.order);
    const auto lg = wl_refine(g, 4);
    const auto lh = wl_refine(h, 4);
    for (std::size_t i = 0; i < g.size(); ++i)
      EXPECT_EQ(lg[i].value, lh[static_cast<std::size_t>(where[i])].value);
  }
}

TEST(WL, DepthZeroSeparatesChargeButNotBondOrder) {
  const MolecularGraph g = testing::molecule("CC(=O)[O-]");
  const auto h = wl_history(g, 1);
  EXPECT_NE(h[0][2], h[0][3]);  // charge differs
  EXPECT_NE(h[1][2], h[1][3]);
  const MolecularGraph e = testing::molecule("OCC(O)CO");
  const auto he = wl_history(e, 2);
  EXPECT_EQ(he[2][0], he[2][5]);  // symmetric terminal hydroxyls
  EXPECT_NE(he[2][0], he[2][3]);
}

TEST(WL, HistoryIsMonotoneInClassCount) {
  const MolecularGraph g = testing::data_monomer("dgeba").graph;
  const auto h = wl_history(g, 8);
  for (std::size_t k = 1; k < h.size(); ++k) EXPECT_GE(count_classes(h[k]), count_classes(h[k - 1]));
}

TEST(WL, ConvergenceDepthOfShippedMonomers) {
  // Regression values from the first computation; all within six iterations.
  const std::pair<const char*, int> expected[] = {
      {"dgeba", 3}, {"tgddm", 3}, {"tmbp", 2}, {"tgpap", 4}, {"dgebf", 3},
      {"ipd", 4},   {"teta", 4},  {"pda", 1},  {"dds", 3},
  };
  for (const auto& [stem, depth] : expected) {
    const WLConvergence c = wl_converged_depth(testing::data_monomer(stem).graph, 10);
    EXPECT_TRUE(c.converged) << stem;
    EXPECT_LE(c.depth, 6) << stem;
    EXPECT_EQ(c.depth, depth) << stem;
  }
}

}  // namespace
}  // namespace polygraph
