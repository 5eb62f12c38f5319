// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "polygraph/core/error.h"
#include "polygraph/polymerizer/polymerizer.h"
#include "test_support.h"

namespace polygraph {
namespace {

ReactionRuleSet load(const char* name) {
  return load_rules((testing::data_dir() / "rules" / name).string());
}

// Small stand-ins: an activated epoxide carbon, a primary amine and an alcohol.
MonomerTemplate epoxide() { return make_monomer("epoxide", "CC[CH2]", {{2, "epoxy_c"}}); }
MonomerTemplate amine() { return make_monomer("amine", "CCN", {{2, "amine_n1"}}); }
MonomerTemplate alcohol() { return make_monomer("alcohol", "CCO", {{2, "hydroxyl"}}); }

PolymerizationConfig quick_config() {
  PolymerizationConfig c;
  c.cutoff = 6.0;
  c.energy.cutoff = 6.0;
  c.relax.max_steps = 50;
  c.stall_limit = 5;
  c.max_bonds_per_cycle = 4;
  return c;
}

TEST(Polymerizer, TwoMonomersReactOnceAndReachFullConversion) {
  const ReactionRuleSet rules = load("epoxy_amine.json");
  const LookupTable table = testing::composite_table({epoxide(), amine()}, rules);
  MolecularSystem s = testing::assemble({{epoxide(), {8, 10, 10}}, {amine(), {11.5, 10, 10}}}, 20.0);
  PolymerizationConfig config = quick_config();
  config.target_conversion = 1.0;
  const double mass_before = system_mass(s);

  const PolymerizationResult r = polymerize(s, config, rules, table);
  ASSERT_EQ(r.reports.size(), 1u);
  ASSERT_EQ(r.reports[0].bonds_formed.size(), 1u);
  EXPECT_EQ(r.reports[0].bonds_formed[0].rule_name, "primary_amine");
  EXPECT_DOUBLE_EQ(degree_of_conversion(r.state), 1.0);
  EXPECT_EQ(connected_components(s.graph).count, 1);
  EXPECT_NEAR(system_mass(s) + r.reports[0].byproduct_mass_removed, mass_before, 1e-9 * mass_before);
  EXPECT_TRUE(s.parameterized);
  EXPECT_NO_THROW(require_parameterized(s));
}

TEST(Polymerizer, AmineReactsBeforeEther) {
  const ReactionRuleSet rules = load("epoxy_amine.json");
  const LookupTable table = testing::composite_table({epoxide(), amine(), alcohol()}, rules);
  MolecularSystem s = testing::assemble({{epoxide(), {5, 10, 10}},
                                         {amine(), {8.5, 10, 10}},
                                         {epoxide(), {20, 10, 10}},
                                         {alcohol(), {23.5, 10, 10}}},
                                        30.0);
  PolymerizationConfig config = quick_config();
  config.target_conversion = 1.0;
  config.max_cycles = 1;
  const PolymerizationResult r = polymerize(s, config, rules, table);
  ASSERT_EQ(r.reports.size(), 1u);
  ASSERT_EQ(r.reports[0].bonds_formed.size(), 1u);
  EXPECT_EQ(r.reports[0].bonds_formed[0].rule_name, "primary_amine");
  EXPECT_EQ(r.reports[0].active_priority, 0);
}

TEST(Polymerizer, EtherFormsOnceAminesAreExhausted) {
  const ReactionRuleSet rules = load("epoxy_amine.json");
  const LookupTable table = testing::composite_table({epoxide(), alcohol()}, rules);
  MolecularSystem s = testing::assemble({{epoxide(), {5, 10, 10}}, {alcohol(), {8.5, 10, 10}}}, 20.0);
  PolymerizationConfig config = quick_config();
  config.target_conversion = 1.0;
  const PolymerizationResult r = polymerize(s, config, rules, table);
  ASSERT_FALSE(r.reports.empty());
  EXPECT_EQ(r.reports.back().bonds_formed.size(), 1u);
  EXPECT_EQ(r.reports.back().bonds_formed[0].rule_name, "etherification");
  EXPECT_DOUBLE_EQ(degree_of_conversion(r.state), 1.0);
}

TEST(Polymerizer, ZeroTargetRunsNoCycles) {
  const ReactionRuleSet rules = load("epoxy_amine.json");
  const LookupTable table = testing::composite_table({epoxide(), amine()}, rules);
  MolecularSystem s = testing::assemble({{epoxide(), {8, 10, 10}}, {amine(), {11.5, 10, 10}}}, 20.0);
  PolymerizationConfig config = quick_config();
  config.target_conversion = 0.0;
  const std::size_t atoms = s.graph.size();
  const PolymerizationResult r = polymerize(s, config, rules, table);
  EXPECT_TRUE(r.reports.empty());
  EXPECT_EQ(s.graph.size(), atoms);
}

TEST(Polymerizer, OutOfRangeSitesStallAndStop) {
  const ReactionRuleSet rules = load("epoxy_amine.json");
  const LookupTable table = testing::composite_table({epoxide(), amine()}, rules);
  MolecularSystem s = testing::assemble({{epoxide(), {2, 10, 10}}, {amine(), {12, 10, 10}}}, 20.0);
  PolymerizationConfig config = quick_config();
  config.relax_between_cycles = false;
  const PolymerizationResult r = polymerize(s, config, rules, table);
  EXPECT_EQ(static_cast<int>(r.reports.size()), config.stall_limit);
  EXPECT_EQ(r.state.stall_counter, config.stall_limit);
  EXPECT_DOUBLE_EQ(degree_of_conversion(r.state), 0.0);
}

TEST(Polymerizer, ConversionCountsCapacity) {
  const ReactionRuleSet rules = load("amine_only.json");
  MolecularSystem s = testing::assemble({{epoxide(), {5, 10, 10}}, {amine(), {10, 10, 10}}}, 20.0);
  ReactionRuleSet all = rules;
  all.conversion_site_types.clear();
  const PolymerizationState st = initial_state(s, all);
  EXPECT_EQ(st.initial_site_count, 1 + 2);  // epoxide once, primary amine twice
  const PolymerizationState epoxy_only = initial_state(s, rules);
  EXPECT_EQ(epoxy_only.initial_site_count, rules.conversion_site_types.empty() ? 3 : 1);
}

TEST(Polymerizer, ConversionWithoutSitesIsUndefined) {
  PolymerizationState st;
  try {
    degree_of_conversion(st);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefinedConversion);
  }
}

TEST(Polymerizer, InvalidConfigIsRejected) {
  const ReactionRuleSet rules = load("epoxy_amine.json");
  const LookupTable table = testing::composite_table({epoxide(), amine()}, rules);
  MolecularSystem s = testing::assemble({{epoxide(), {8, 10, 10}}, {amine(), {11.5, 10, 10}}}, 20.0);
  for (auto edit : std::vector<void (*)(PolymerizationConfig&)>{
           [](PolymerizationConfig& c) { c.cutoff = 0; },
           [](PolymerizationConfig& c) { c.target_conversion = 1.5; },
           [](PolymerizationConfig& c) { c.stall_limit = 0; },
           [](PolymerizationConfig& c) { c.priority_patience = 0; },
       }) {
    PolymerizationConfig c = quick_config();
    edit(c);
    try {
      polymerize(s, c, rules, table);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kConfig);
    }
  }
}

TEST(Polymerizer, ComponentsJoinAtMostOncePerCycle) {
  // Both candidate pairs connect the same two molecules; only the first may
  // form in one cycle.
  const ReactionRuleSet rules = load("amine_only.json");
  const MonomerTemplate diamine = make_monomer("diamine", "NCCCCCCN", {{0, "amine_n1"}, {7, "amine_n1"}});
  const MonomerTemplate diepoxide = make_monomer("diepoxide", "[CH2]CCCCCC[CH2]", {{0, "epoxy_c"}, {7, "epoxy_c"}});
  MolecularSystem s = testing::assemble({{diamine, {10, 15, 15}}, {diepoxide, {20, 15, 15}}}, 30.0);
  const int n0 = 0, n1 = 7;
  const int e0 = static_cast<int>(diamine.graph.size()), e1 = e0 + 7;
  const std::vector<CandidatePair> pairs{{n0, e0, 0, 3.0}, {n1, e1, 0, 3.1}};
  const LookupTable table = testing::composite_table({diamine, diepoxide}, rules);
  assign_parameters(s, table);
  const CycleReport report = form_bonds(s, pairs, rules, {4, 6}, &table);
  ASSERT_EQ(report.bonds_formed.size(), 1u);
  EXPECT_EQ(report.bonds_formed[0].a, n0);
  EXPECT_EQ(connected_components(s.graph).count, 1);
}

TEST(Polymerizer, ShakeMovesComponentsRigidly) {
  const ReactionRuleSet rules = load("epoxy_amine.json");
  MolecularSystem s = testing::assemble({{epoxide(), {8, 10, 10}}, {amine(), {11.5, 10, 10}}}, 20.0);
  const MolecularSystem before = s;
  shake_components(s, 1.0, 3);
  for (const Bond& b : s.graph.bonds()) {
    const double d0 = norm(minimum_image(before.box, before.graph.atom(b.a).position, before.graph.atom(b.b).position));
    const double d1 = norm(minimum_image(s.box, s.graph.atom(b.a).position, s.graph.atom(b.b).position));
    EXPECT_NEAR(d0, d1, 1e-9);
  }
  EXPECT_NE(s.graph.atom_at(0).position.x, before.graph.atom_at(0).position.x);
}

}  // namespace
}  // namespace polygraph
