// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "polygraph/core/error.h"
#include "polygraph/fftyping/assign.h"
#include "polygraph/fftyping/fragment.h"
#include "polygraph/fftyping/wl.h"
#include "test_support.h"

namespace polygraph {
namespace {

using testing::molecule;

// Every assigned term must equal the fragment's term for the same tuple.
template <typename Map, typename Tuple, typename Params>
void expect_terms(const Map& fragment_terms, const std::vector<Tuple>& tuples, const std::vector<Params>& assigned,
                  const char* what) {
  ASSERT_EQ(tuples.size(), fragment_terms.size()) << what;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto it = fragment_terms.find(tuples[t]);
    ASSERT_NE(it, fragment_terms.end()) << what << " " << t;
    EXPECT_EQ(assigned[t], it->second) << what << " " << t;
  }
}

TEST(Lookup, SelfTransferReproducesFragmentExactly) {
  for (const char* stem : {"dgeba", "ipd", "dds", "tbpm"}) {
    const MolecularGraph g = reindexed(testing::data_monomer(stem).graph);
    const FragmentSpec frag = demoff::parameterize(g, stem);
    const LookupTable table = build_lookup_table({frag}, kDefaultWLDepth);
    const ParameterAssignment pa = assign_parameters(g, table);

    ASSERT_EQ(pa.params.atoms.size(), frag.params.atoms.size());
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(pa.params.atoms[i], frag.params.atoms[i]) << stem;
    for (std::size_t b = 0; b < g.bonds().size(); ++b) {
      const Bond& bond = g.bonds()[b];
      const int i = g.index_of(bond.a), j = g.index_of(bond.b);
      EXPECT_EQ(pa.params.bonds[b], frag.params.bonds.at({std::min(i, j), std::max(i, j)})) << stem;
    }
    expect_terms(frag.params.angles, pa.topology.angles, pa.params.angles, "angle");
    expect_terms(frag.params.dihedrals, pa.topology.dihedrals, pa.params.dihedrals, "dihedral");
    expect_terms(frag.params.impropers, pa.topology.impropers, pa.params.impropers, "improper");
  }
}

TEST(Lookup, DimerAtomsFarFromJunctionMatchMonomer) {
  const MonomerTemplate ipd = testing::data_monomer("ipd");
  const MonomerTemplate dgeba = testing::data_monomer("dgeba");
  const ReactionRuleSet rules = load_rules((testing::data_dir() / "rules" / "epoxy_amine.json").string());
  const LookupTable table =
      build_lookup_table(load_fragments((testing::data_dir() / "fragments" / "dgeba_ipd.json").string()), 4);
  const testing::Dimer d = testing::react_pair(ipd, dgeba, rules.rules[0]);
  const ParameterAssignment dimer = assign_parameters(d.graph, table);
  const std::vector<int> hops = testing::hops_from_reaction_center(d, ipd, dgeba);
  const auto dimer_labels = wl_refine(d.graph, table.depth());

  // The amine nitrogen trades an H for the new bond; the activated epoxide
  // carbon gains a neighbor, and degree is part of the depth-0 label.
  const int n = d.graph.index_of(d.site_a), c = d.graph.index_of(d.site_b);
  EXPECT_EQ(d.graph.degree(n), ipd.graph.degree(ipd.graph.index_of(testing::site_of(ipd, "amine_n1"))));
  EXPECT_EQ(d.graph.degree(c), dgeba.graph.degree(dgeba.graph.index_of(testing::site_of(dgeba, "epoxy_c"))) + 1);
  const std::vector<int> from_c = bond_distances_from(d.graph, c);

  int beyond = 0, at_depth_same = 0, at_depth_seen = 0;
  for (const auto& [m, ids] : {std::pair{&ipd, &d.ids_a}, std::pair{&dgeba, &d.ids_b}}) {
    const ParameterAssignment mono = assign_parameters(m->graph, table);
    const auto mono_labels = wl_refine(m->graph, table.depth());
    for (std::size_t i = 0; i < m->graph.size(); ++i) {
      const int id = (*ids)[i];
      if (!d.graph.contains(id)) continue;  // byproduct
      const auto di = static_cast<std::size_t>(d.graph.index_of(id));
      const bool same = dimer_labels[di].value == mono_labels[i].value && dimer.params.atoms[di] == mono.params.atoms[i];
      if (hops[di] > table.depth()) {
        EXPECT_TRUE(same) << m->name << " atom " << i;
        ++beyond;
      } else if (hops[di] == table.depth()) {
        // Exactly depth hops away, only the carbon's new degree is visible.
        EXPECT_EQ(same, from_c[di] > table.depth()) << m->name << " atom " << i;
        at_depth_same += same ? 1 : 0;
        at_depth_seen += from_c[di] == table.depth() ? 1 : 0;
      }
    }
  }
  EXPECT_GT(beyond, 40);
  EXPECT_GT(at_depth_same, 0);
  EXPECT_GT(at_depth_seen, 0);
}

TEST(Lookup, ConsistentDuplicatesAreMerged) {
  const FragmentSpec f = demoff::parameterize(reindexed(molecule("CCO")), "ethanol");
  FragmentSpec g = f;
  g.name = "ethanol_again";
  const LookupTable t = build_lookup_table({f, g}, 2);
  EXPECT_EQ(t.atom_count(), build_lookup_table({f}, 2).atom_count());
}

TEST(Lookup, InconsistentDuplicatesAreAConflict) {
  const FragmentSpec f = demoff::parameterize(reindexed(molecule("CCO")), "ethanol");
  FragmentSpec g = f;
  g.name = "ethanol_edited";
  g.params.bonds.begin()->second.k *= 1.01;
  try {
    build_lookup_table({f, g}, 2);
    FAIL() << "expected conflict";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConflict);
    EXPECT_NE(std::string(e.what()).find("ethanol"), std::string::npos) << e.what();
  }
}

TEST(Lookup, DifferencesBelowToleranceAreNotConflicts) {
  const FragmentSpec f = demoff::parameterize(reindexed(molecule("CCO")), "ethanol");
  FragmentSpec g = f;
  g.params.bonds.begin()->second.k *= 1.0 + 1e-9;
  EXPECT_NO_THROW(build_lookup_table({f, g}, 2));
}

TEST(Lookup, MissingEnvironmentNamesAtomsAndSuggestsFragment) {
  const LookupTable table = build_lookup_table({demoff::parameterize(reindexed(molecule("CCC")), "propane")}, 2);
  const MolecularGraph butane = molecule("CCCC");
  try {
    assign_parameters(butane, table);
    FAIL() << "expected missing environment";
  } catch (const MissingEnvironmentError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingEnvironment);
    EXPECT_FALSE(e.atom_ids().empty());
    EXPECT_EQ(e.element_context().rfind("C(", 0), 0u) << e.element_context();
    EXPECT_EQ(e.suggestion(), "propane");
  }
}

TEST(Lookup, UnknownElementHasNoSuggestion) {
  const LookupTable table = build_lookup_table({demoff::parameterize(reindexed(molecule("CCC")), "propane")}, 2);
  try {
    assign_parameters(molecule("ClCl"), table);
    FAIL() << "expected missing environment";
  } catch (const MissingEnvironmentError& e) {
    EXPECT_TRUE(e.suggestion().empty()) << e.suggestion();
  }
}

TEST(Lookup, PlanarCentersComeFromFragmentImpropers) {
  const LookupTable table = build_lookup_table({demoff::parameterize(reindexed(molecule("CC(=O)N")), "acetamide")}, 2);
  const MolecularGraph g = molecule("CC(=O)N");
  const ParameterAssignment pa = assign_parameters(g, table);
  ASSERT_FALSE(pa.topology.impropers.empty());
  EXPECT_EQ(pa.topology.impropers[0][0], g.atom_at(1).id);
}

TEST(Lookup, FragmentJsonRoundTrip) {
  const FragmentSpec f = demoff::parameterize(reindexed(molecule("c1ccccc1O")), "phenol");
  const std::string text = fragment_to_json(f);
  const std::vector<FragmentSpec> back = fragments_from_json(text);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(fragment_to_json(back[0]), text);
}

TEST(Lookup, IncompleteFragmentIsRejected) {
  FragmentSpec f = demoff::parameterize(reindexed(molecule("CCO")), "ethanol");
  f.params.angles.erase(f.params.angles.begin());
  try {
    check_fragment_complete(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
}

}  // namespace
}  // namespace polygraph
