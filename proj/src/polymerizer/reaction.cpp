// SPDX-License-Identifier: Apache-2.0
#include "polygraph/polymerizer/reaction.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polygraph/core/error.h"

namespace polygraph {

using nlohmann::json;

int rule_orientation(const ReactionRule& rule, std::string_view t1, std::string_view t2) {
  if (rule.site_a == t1 && rule.site_b == t2) return 1;
  if (rule.site_a == t2 && rule.site_b == t1) return -1;
  return 0;
}

bool label_is_used(const ReactionRuleSet& rules, std::string_view label) {
  return std::any_of(rules.rules.begin(), rules.rules.end(),
                     [&](const ReactionRule& r) { return r.site_a == label || r.site_b == label; });
}

int site_capacity(const ReactionRuleSet& rules, std::string_view label) {
  std::set<std::string> visiting;
  std::function<int(const std::string&)> cap = [&](const std::string& l) -> int {
    if (l.empty()) return 0;
    if (!visiting.insert(l).second)
      throw Error(ErrorCode::kConfig, "site transform chain through '" + l + "' is cyclic");
    int best = 0;
    for (const auto& r : rules.rules) {
      if (r.site_a == l) best = std::max(best, 1 + cap(r.transform_a));
      if (r.site_b == l) best = std::max(best, 1 + cap(r.transform_b));
    }
    visiting.erase(l);
    return best;
  };
  return cap(std::string(label));
}

namespace {

void check_rules(const ReactionRuleSet& set, const std::string& where) {
  for (const auto& r : set.rules) {
    if (r.site_a.empty() || r.site_b.empty())
      throw Error(ErrorCode::kConfig, where + ": rule '" + r.name + "' needs both site labels");
    for (const auto* pattern : {&r.byproducts_a, &r.byproducts_b})
      for (const auto& symbol : *pattern) element_by_symbol(symbol);
  }
  for (const auto& r : set.rules) site_capacity(set, r.site_a), site_capacity(set, r.site_b);
}

}  // namespace

ReactionRuleSet rules_from_json(std::string_view text, std::string_view source) {
  const std::string where(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what(), e.byte);
  }
  ReactionRuleSet set;
  try {
    const int version = doc.value("schema_version", 0);
    if (version != kRulesSchemaVersion)
      throw Error(ErrorCode::kConfig, where + ": unsupported rules schema_version " + std::to_string(version));
    for (const auto& node : doc.at("rules")) {
      ReactionRule r;
      r.name = node.value("name", std::string());
      r.site_a = node.at("site_a").get<std::string>();
      r.site_b = node.at("site_b").get<std::string>();
      r.priority = node.value("priority", 0);
      try {
        r.new_bond_order = bond_order_from_name(node.value("bond_order", std::string("single")));
      } catch (const Error& e) {
        throw Error(ErrorCode::kConfig, where + ": rule '" + r.name + "': " + e.what());
      }
      r.byproducts_a = node.value("byproducts_a", std::vector<std::string>{});
      r.byproducts_b = node.value("byproducts_b", std::vector<std::string>{});
      if (node.contains("transform_a") && !node.at("transform_a").is_null())
        r.transform_a = node.at("transform_a").get<std::string>();
      if (node.contains("transform_b") && !node.at("transform_b").is_null())
        r.transform_b = node.at("transform_b").get<std::string>();
      if (r.name.empty()) r.name = r.site_a + "+" + r.site_b;
      set.rules.push_back(std::move(r));
    }
    set.conversion_site_types = doc.value("conversion_site_types", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, where + ": " + e.what());
  }
  check_rules(set, where);
  return set;
}

ReactionRuleSet load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open rules file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return rules_from_json(buffer.str(), path);
}

std::string rules_to_json(const ReactionRuleSet& set) {
  json doc;
  doc["schema_version"] = kRulesSchemaVersion;
  json list = json::array();
  for (const auto& r : set.rules) {
    json node{{"name", r.name},
              {"site_a", r.site_a},
              {"site_b", r.site_b},
              {"priority", r.priority},
              {"bond_order", std::string(bond_order_name(r.new_bond_order))},
              {"byproducts_a", r.byproducts_a},
              {"byproducts_b", r.byproducts_b}};
    node["transform_a"] = r.transform_a.empty() ? json(nullptr) : json(r.transform_a);
    node["transform_b"] = r.transform_b.empty() ? json(nullptr) : json(r.transform_b);
    list.push_back(node);
  }
  doc["rules"] = list;
  if (!set.conversion_site_types.empty()) doc["conversion_site_types"] = set.conversion_site_types;
  return doc.dump(2);
}

std::vector<int> select_byproducts(const MolecularGraph& g, int site_id, int partner_id,
                                   const std::vector<std::string>& pattern, const PeriodicBox* box) {
  std::vector<int> removed;
  std::set<int> taken;
  const int site = g.index_of(site_id);
  const Vec3 partner_pos = g.atom(partner_id).position;
  for (const std::string& symbol : pattern) {
    int best = -1;
    double best_d = 0.0;
    for (const Neighbor& nb : g.neighbors(site)) {
      const Atom& a = g.atom_at(nb.index);
      if (a.element->symbol != symbol || taken.contains(a.id) || a.id == partner_id) continue;
      const double d = box ? norm2(box->minimum_image(a.position - partner_pos)) : 0.0;
      if (best < 0 || d < best_d || (d == best_d && a.id < g.atom_at(best).id)) {
        best = nb.index;
        best_d = d;
      }
    }
    if (best < 0)
      throw Error(ErrorCode::kConfig, "site atom " + std::to_string(site_id) + " has no " + symbol +
                                          " neighbor to remove as byproduct");
    // Subtree reachable from the byproduct neighbor without crossing the site.
    std::vector<int> stack{best};
    std::set<int> seen{best};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(u)) {
        if (nb.index == site && u == best) continue;
        if (nb.index == site || g.atom_at(nb.index).id == partner_id)
          throw Error(ErrorCode::kConfig, "byproduct " + symbol + " on site atom " + std::to_string(site_id) +
                                              " is not detachable by cutting one bond");
        if (seen.insert(nb.index).second) stack.push_back(nb.index);
      }
    }
    for (int index : seen) {
      const int id = g.atom_at(index).id;
      if (taken.insert(id).second) removed.push_back(id);
    }
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

ReactionOutcome execute_reaction(MolecularGraph& g, int a_id, int b_id, const ReactionRule& rule,
                                 const PeriodicBox* box) {
  ReactionOutcome out;
  std::vector<int> removed = select_byproducts(g, a_id, b_id, rule.byproducts_a, box);
  std::vector<int> removed_b = select_byproducts(g, b_id, a_id, rule.byproducts_b, box);
  removed.insert(removed.end(), removed_b.begin(), removed_b.end());
  std::sort(removed.begin(), removed.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
    throw Error(ErrorCode::kConfig, "byproduct selections of rule '" + rule.name + "' overlap");
  for (int id : removed) out.removed_mass += g.atom(id).element->atomic_mass;
  g.add_bond(a_id, b_id, rule.new_bond_order);
  g.atom(a_id).site_role = rule.transform_a;
  g.atom(b_id).site_role = rule.transform_b;
  g.remove_atoms(removed);
  out.removed_atoms = std::move(removed);
  return out;
}

}  // namespace polygraph
