// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polygraph/molgraph/graph.h"
#include "polygraph/simbox/box.h"

namespace polygraph {

inline constexpr int kRulesSchemaVersion = 1;

// Byproduct patterns are lists of element symbols. Each entry selects one
// neighbor of the site with that element (the one closest to the partner,
// ties by lower id) together with everything that detaches with it when the
// site-neighbor bond is cut.
struct ReactionRule {
  std::string name;
  std::string site_a;
  std::string site_b;
  int priority = 0;
  BondOrder new_bond_order = BondOrder::kSingle;
  std::vector<std::string> byproducts_a;
  std::vector<std::string> byproducts_b;
  std::string transform_a;  // empty: site consumed
  std::string transform_b;
};

struct ReactionRuleSet {
  std::vector<ReactionRule> rules;
  // Site labels counted by degree_of_conversion; empty means all labels.
  std::vector<std::string> conversion_site_types;
};

// +1 when (type1, type2) = (site_a, site_b), -1 when reversed, 0 otherwise.
int rule_orientation(const ReactionRule& rule, std::string_view type1, std::string_view type2);

// Number of reactions a site of this label can still undergo along its
// transform chain (0 for labels no rule uses). Throws kConfig on cycles.
int site_capacity(const ReactionRuleSet& rules, std::string_view label);

// True when the label appears on either side of any rule.
bool label_is_used(const ReactionRuleSet& rules, std::string_view label);

ReactionRuleSet rules_from_json(std::string_view text, std::string_view source = "<memory>");
ReactionRuleSet load_rules(const std::string& path);
std::string rules_to_json(const ReactionRuleSet& rules);

// Atom ids removed with the byproduct patterns of one site. When box is
// non-null, "closest to the partner" uses minimum-image distances to the
// partner position; otherwise only ids break ties.
std::vector<int> select_byproducts(const MolecularGraph& graph, int site_id, int partner_id,
                                   const std::vector<std::string>& pattern,
                                   const PeriodicBox* box);

struct ReactionOutcome {
  std::vector<int> removed_atoms;  // ids
  double removed_mass = 0.0;       // amu
};

// Forms the bond between site atoms a (playing rule.site_a) and b (site_b),
// deletes byproducts, and updates site labels.
ReactionOutcome execute_reaction(MolecularGraph& graph, int a_id, int b_id, const ReactionRule& rule,
                                 const PeriodicBox* box);

}  // namespace polygraph
