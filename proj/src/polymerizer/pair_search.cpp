// SPDX-License-Identifier: Apache-2.0
#include "polygraph/polymerizer/pair_search.h"

#include <algorithm>
#include <map>
#include <set>

#include "polygraph/core/error.h"
#include "polygraph/simbox/cell_list.h"

namespace polygraph {

namespace {

struct Compatible {
  int other;  // index into sites
  int rule;
  int orientation;  // +1: this site plays site_a
  double distance;
};

}  // namespace

PairSearchResult find_reaction_pairs(const MolecularSystem& s, const ReactionRuleSet& rules,
                                     const PairSearchOptions& options) {
  if (!(options.cutoff > 0.0)) throw Error(ErrorCode::kConfig, "pair search cutoff must be positive");
  PairSearchResult result;
  const auto& g = s.graph;

  std::vector<int> site_index;  // atom index per site
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    if (!g.atom_at(i).site_role.empty() && label_is_used(rules, g.atom_at(i).site_role)) site_index.push_back(i);
  if (site_index.empty()) return result;

  std::vector<Vec3> pos;
  for (int i : site_index) pos.push_back(g.atom_at(i).position);
  const CellList cells(s.box, pos, std::min(options.cutoff, 0.5 * s.box.min_length()));
  const ComponentLabels comp = connected_components(g);
  const int max_hops = options.min_topological_separation;

  // Cache of bounded BFS results per site (only needed for same-component pairs).
  std::map<int, std::vector<int>> hop_cache;
  auto far_enough = [&](int si, int sj) {
    const int ai = site_index[static_cast<std::size_t>(si)], aj = site_index[static_cast<std::size_t>(sj)];
    if (comp.label[static_cast<std::size_t>(ai)] != comp.label[static_cast<std::size_t>(aj)]) return true;
    if (max_hops <= 0) return true;
    auto it = hop_cache.find(si);
    if (it == hop_cache.end()) it = hop_cache.emplace(si, bond_distances_from(g, ai, max_hops)).first;
    return it->second[static_cast<std::size_t>(aj)] >= max_hops;
  };

  // Every compatible (site, site, rule) triple within the cutoff, by priority.
  std::map<int, std::vector<std::vector<Compatible>>> by_priority;
  const double cutoff2 = options.cutoff * options.cutoff;
  auto consider = [&](int si, int sj, const Vec3& d) {
    if (norm2(d) > cutoff2) return;
    const std::string& li = g.atom_at(site_index[static_cast<std::size_t>(si)]).site_role;
    const std::string& lj = g.atom_at(site_index[static_cast<std::size_t>(sj)]).site_role;
    bool checked = false, ok = false;
    for (int r = 0; r < static_cast<int>(rules.rules.size()); ++r) {
      const ReactionRule& rule = rules.rules[static_cast<std::size_t>(r)];
      if (rule.priority > options.priority_floor) continue;
      const int o = rule_orientation(rule, li, lj);
      if (o == 0) continue;
      if (!checked) {
        ok = far_enough(si, sj);
        checked = true;
      }
      if (!ok) return;
      auto& lists = by_priority[rule.priority];
      if (lists.empty()) lists.resize(site_index.size());
      const double dist = norm(d);
      lists[static_cast<std::size_t>(si)].push_back({sj, r, o, dist});
      lists[static_cast<std::size_t>(sj)].push_back({si, r, -o, dist});
    }
  };
  if (options.cutoff <= 0.5 * s.box.min_length()) {
    cells.for_each_pair(options.cutoff, consider);
  } else {
    for (int i = 0; i < static_cast<int>(pos.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(pos.size()); ++j) consider(i, j, s.box.minimum_image(pos[static_cast<std::size_t>(j)] - pos[static_cast<std::size_t>(i)]));
  }
  if (by_priority.empty()) return result;

  auto& [priority, lists] = *by_priority.begin();
  result.has_candidates = true;
  result.active_priority = priority;

  auto atom_id = [&](int si) { return g.atom_at(site_index[static_cast<std::size_t>(si)]).id; };
  // Nearest compatible partner per site: (distance, partner id, rule index).
  std::vector<const Compatible*> nearest(site_index.size(), nullptr);
  for (std::size_t si = 0; si < lists.size(); ++si) {
    for (const Compatible& c : lists[si]) {
      const Compatible* best = nearest[si];
      if (!best || c.distance < best->distance ||
          (c.distance == best->distance &&
           (atom_id(c.other) < atom_id(best->other) || (c.other == best->other && c.rule < best->rule))))
        nearest[si] = &c;
    }
  }
  for (std::size_t si = 0; si < lists.size(); ++si) {
    const Compatible* c = nearest[si];
    if (!c) continue;
    const Compatible* back = nearest[static_cast<std::size_t>(c->other)];
    if (!back || back->other != static_cast<int>(si)) continue;
    if (atom_id(static_cast<int>(si)) > atom_id(c->other)) continue;  // report once
    // Both directions agree on the partner; use the lower rule index of the two views.
    const Compatible* chosen = back->rule < c->rule ? back : c;
    const bool si_is_a = (chosen == c) ? c->orientation > 0 : back->orientation < 0;
    const int ida = si_is_a ? atom_id(static_cast<int>(si)) : atom_id(c->other);
    const int idb = si_is_a ? atom_id(c->other) : atom_id(static_cast<int>(si));
    result.pairs.push_back({ida, idb, chosen->rule, c->distance});
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const CandidatePair& x, const CandidatePair& y) {
    if (x.distance != y.distance) return x.distance < y.distance;
    const auto kx = std::minmax(x.a, x.b), ky = std::minmax(y.a, y.b);
    return kx < ky;
  });
  return result;
}

}  // namespace polygraph
