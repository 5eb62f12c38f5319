// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "polygraph/core/error.h"
#include "polygraph/polymerizer/reaction.h"
#include "test_support.h"

namespace polygraph {
namespace {

using testing::molecule;

ReactionRuleSet epoxy_amine() {
  return load_rules((testing::data_dir() / "rules" / "epoxy_amine.json").string());
}

ErrorCode rules_error(const std::string& text) {
  try {
    rules_from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kIo;
}

int heavy_neighbor_h(const MolecularGraph& g, int id) {
  int n = 0;
  for (const Neighbor& nb : g.neighbors(g.index_of(id))) n += g.atom_at(nb.index).element->symbol == "H";
  return n;
}

TEST(Reaction, CapacityFollowsTransformChains) {
  const ReactionRuleSet rules = epoxy_amine();
  EXPECT_EQ(site_capacity(rules, "amine_n1"), 2);
  EXPECT_EQ(site_capacity(rules, "amine_n2"), 1);
  EXPECT_EQ(site_capacity(rules, "epoxy_c"), 1);
  EXPECT_EQ(site_capacity(rules, "hydroxyl"), 1);
  EXPECT_EQ(site_capacity(rules, "aryl_br"), 0);
  EXPECT_TRUE(label_is_used(rules, "hydroxyl"));
  EXPECT_FALSE(label_is_used(rules, "aryl_br"));
}

TEST(Reaction, OrientationIsSigned) {
  const ReactionRule& r = epoxy_amine().rules[0];
  EXPECT_EQ(rule_orientation(r, "amine_n1", "epoxy_c"), 1);
  EXPECT_EQ(rule_orientation(r, "epoxy_c", "amine_n1"), -1);
  EXPECT_EQ(rule_orientation(r, "epoxy_c", "epoxy_c"), 0);
}

TEST(Reaction, CyclicTransformChainIsRejected) {
  EXPECT_EQ(rules_error(R"({"schema_version":1,"rules":[
      {"site_a":"x","site_b":"y","transform_a":"z"},
      {"site_a":"z","site_b":"y","transform_a":"x"}]})"),
            ErrorCode::kConfig);
}

TEST(Reaction, MalformedRuleFilesAreRejected) {
  EXPECT_EQ(rules_error("{\"schema_version\":1,\"rules\":["), ErrorCode::kParse);
  EXPECT_EQ(rules_error(R"({"schema_version":2,"rules":[]})"), ErrorCode::kConfig);
  EXPECT_EQ(rules_error(R"({"schema_version":1,"rules":[{"site_a":"x"}]})"), ErrorCode::kConfig);
  EXPECT_EQ(rules_error(R"({"schema_version":1,"rules":[{"site_a":"x","site_b":""}]})"), ErrorCode::kConfig);
  EXPECT_EQ(rules_error(R"({"schema_version":1,"rules":[{"site_a":"x","site_b":"y","byproducts_a":["Qq"]}]})"),
            ErrorCode::kUnsupportedElement);
  EXPECT_EQ(rules_error(R"({"schema_version":1,"rules":[{"site_a":"x","site_b":"y","bond_order":"quintuple"}]})"),
            ErrorCode::kConfig);
}

TEST(Reaction, JsonRoundTrip) {
  const ReactionRuleSet rules = epoxy_amine();
  const std::string text = rules_to_json(rules);
  EXPECT_EQ(rules_to_json(rules_from_json(text)), text);
}

TEST(Reaction, HydrogenChlorideCondensationRemovesOneHClMass) {
  // CH3Cl + NH3 -> CH3NH2 + HCl
  MolecularGraph g = molecule("CCl");
  const std::vector<int> n_ids = append_graph(g, molecule("N"), 2);
  const int c = g.atom_at(0).id;
  const int n = n_ids[0];
  g.atom(c).site_role = "alkyl_cl";
  g.atom(n).site_role = "amine_n1";
  ReactionRule rule;
  rule.name = "amination";
  rule.site_a = "alkyl_cl";
  rule.site_b = "amine_n1";
  rule.byproducts_a = {"Cl"};
  rule.byproducts_b = {"H"};
  rule.transform_b = "amine_n2";

  const double before = total_element_mass(g);
  const std::size_t atoms_before = g.size();
  const ReactionOutcome out = execute_reaction(g, c, n, rule, nullptr);
  EXPECT_NEAR(out.removed_mass, 36.458, 1e-9);
  EXPECT_NEAR(before - total_element_mass(g), out.removed_mass, 1e-9);
  EXPECT_EQ(out.removed_atoms.size(), 2u);
  EXPECT_EQ(g.size(), atoms_before - 2);
  EXPECT_TRUE(g.find_bond(c, n).has_value());
  EXPECT_EQ(g.atom(c).site_role, "");
  EXPECT_EQ(g.atom(n).site_role, "amine_n2");
  EXPECT_EQ(heavy_neighbor_h(g, n), 2);
  EXPECT_EQ(connected_components(g).count, 1);
}

TEST(Reaction, AdditionWithoutByproductKeepsEveryAtom) {
  const MonomerTemplate ipd = testing::data_monomer("ipd");
  const MonomerTemplate dgeba = testing::data_monomer("dgeba");
  ReactionRule rule = epoxy_amine().rules[0];
  rule.byproducts_a.clear();
  const testing::Dimer d = testing::react_pair(ipd, dgeba, rule);
  EXPECT_EQ(d.graph.size(), ipd.graph.size() + dgeba.graph.size());
  EXPECT_NEAR(total_element_mass(d.graph), total_element_mass(ipd.graph) + total_element_mass(dgeba.graph), 1e-9);
  EXPECT_EQ(d.graph.atom(d.site_a).site_role, "amine_n2");
  EXPECT_EQ(d.graph.atom(d.site_b).site_role, "");
}

TEST(Reaction, ActivatedEpoxyLosesOneAmineHydrogen) {
  const MonomerTemplate ipd = testing::data_monomer("ipd");
  const MonomerTemplate dgeba = testing::data_monomer("dgeba");
  const testing::Dimer d = testing::react_pair(ipd, dgeba, epoxy_amine().rules[0]);
  EXPECT_EQ(d.graph.size(), ipd.graph.size() + dgeba.graph.size() - 1);
  EXPECT_EQ(heavy_neighbor_h(d.graph, d.site_a), 1);
  // The radical carbon becomes a saturated CH2.
  EXPECT_EQ(d.graph.degree(d.graph.index_of(d.site_b)), 4);
  EXPECT_EQ(bonded_valence(d.graph, d.graph.index_of(d.site_b)), 4);
}

TEST(Reaction, ByproductClosestToPartnerIsChosen) {
  MolecularGraph g = molecule("N");  // N then three H
  const std::vector<int> c_ids = append_graph(g, molecule("C"), 2);
  const PeriodicBox box = make_box(20, 20, 20);
  g.atom_at(0).position = {5, 5, 5};
  g.atom_at(1).position = {6, 5, 5};
  g.atom_at(2).position = {4, 5, 5};
  g.atom_at(3).position = {5, 6, 5};
  g.atom(c_ids[0]).position = {3, 5, 5};
  const std::vector<int> chosen = select_byproducts(g, g.atom_at(0).id, c_ids[0], {"H"}, &box);
  ASSERT_EQ(chosen.size(), 1u);
  EXPECT_EQ(chosen[0], g.atom_at(2).id);
  // Without geometry the lowest id wins.
  EXPECT_EQ(select_byproducts(g, g.atom_at(0).id, c_ids[0], {"H"}, nullptr)[0], g.atom_at(1).id);
}

TEST(Reaction, ByproductUsesMinimumImage) {
  MolecularGraph g = molecule("N");
  const std::vector<int> c_ids = append_graph(g, molecule("C"), 2);
  const PeriodicBox box = make_box(10, 10, 10);
  g.atom_at(0).position = {9.5, 5, 5};
  g.atom_at(1).position = {8.5, 5, 5};
  g.atom_at(2).position = {0.4, 5, 5};  // wrapped, close to the partner through the boundary
  g.atom_at(3).position = {9.5, 6, 5};
  g.atom(c_ids[0]).position = {1.0, 5, 5};
  EXPECT_EQ(select_byproducts(g, g.atom_at(0).id, c_ids[0], {"H"}, &box)[0], g.atom_at(2).id);
}

TEST(Reaction, MissingByproductElementIsAConfigError) {
  MolecularGraph g = molecule("C");
  const std::vector<int> n_ids = append_graph(g, molecule("N"), 2);
  try {
    select_byproducts(g, g.atom_at(0).id, n_ids[0], {"Cl"}, nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
}

TEST(Reaction, LeavingGroupSubtreeIsRemovedWhole) {
  // Ethanol + NH3 -> ethylamine + H2O: the hydroxyl leaves with its hydrogen.
  MolecularGraph g = molecule("CCO");
  const std::vector<int> n_ids = append_graph(g, molecule("N"), 2);
  const int carbon = g.atom_at(1).id;
  const int oxygen = g.atom_at(2).id;
  ReactionRule rule;
  rule.site_a = "alcohol";
  rule.site_b = "amine";
  rule.byproducts_a = {"O"};
  rule.byproducts_b = {"H"};
  const ReactionOutcome out = execute_reaction(g, carbon, n_ids[0], rule, nullptr);
  EXPECT_EQ(out.removed_atoms.size(), 3u);
  EXPECT_FALSE(g.contains(oxygen));
  EXPECT_NEAR(out.removed_mass, 2 * 1.008 + 15.999, 1e-9);
}

}  // namespace
}  // namespace polygraph
