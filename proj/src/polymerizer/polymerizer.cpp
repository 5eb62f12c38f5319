// SPDX-License-Identifier: Apache-2.0
#include "polygraph/polymerizer/polymerizer.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

#include "polygraph/core/error.h"
#include "polygraph/core/log.h"
#include "polygraph/core/random.h"
#include "polygraph/fftyping/assign.h"

namespace polygraph {

namespace {

bool counts_toward_conversion(const ReactionRuleSet& rules, const std::string& label) {
  if (!label_is_used(rules, label)) return false;
  if (rules.conversion_site_types.empty()) return true;
  return std::find(rules.conversion_site_types.begin(), rules.conversion_site_types.end(), label) !=
         rules.conversion_site_types.end();
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

PolymerizationState initial_state(const MolecularSystem& system, const ReactionRuleSet& rules) {
  PolymerizationState state;
  for (const Atom& a : system.graph.atoms()) {
    if (a.site_role.empty() || !counts_toward_conversion(rules, a.site_role)) continue;
    state.counted_sites.push_back(a.id);
    state.initial_site_count += site_capacity(rules, a.site_role);
  }
  int floor = std::numeric_limits<int>::max();
  for (const auto& r : rules.rules) floor = std::min(floor, r.priority);
  state.priority_floor = rules.rules.empty() ? 0 : floor;
  return state;
}

void update_conversion(PolymerizationState& state, const MolecularSystem& system, const ReactionRuleSet& rules) {
  int remaining = 0;
  for (int id : state.counted_sites)
    if (system.graph.contains(id)) remaining += site_capacity(rules, system.graph.atom(id).site_role);
  state.reacted_site_count = state.initial_site_count - remaining;
}

double degree_of_conversion(const PolymerizationState& state) {
  if (state.initial_site_count <= 0)
    throw Error(ErrorCode::kUndefinedConversion, "conversion is undefined without reaction sites");
  return static_cast<double>(state.reacted_site_count) / state.initial_site_count;
}

CycleReport form_bonds(MolecularSystem& system, const std::vector<CandidatePair>& pairs,
                       const ReactionRuleSet& rules, const FormBondsOptions& options, const LookupTable* table) {
  CycleReport report;
  if (pairs.empty() || options.max_bonds <= 0) return report;
  auto& g = system.graph;
  const ComponentLabels comp = connected_components(g);
  std::vector<int> parent(static_cast<std::size_t>(comp.count));
  std::iota(parent.begin(), parent.end(), 0);
  std::map<int, int> component_of;                   // atom id -> component at cycle start
  for (const CandidatePair& p : pairs)
    for (int id : {p.a, p.b})
      if (g.contains(id)) component_of[id] = comp.label[static_cast<std::size_t>(g.index_of(id))];

  for (const CandidatePair& p : pairs) {
    if (static_cast<int>(report.bonds_formed.size()) >= options.max_bonds) break;
    if (!g.contains(p.a) || !g.contains(p.b)) continue;
    const ReactionRule& rule = rules.rules.at(static_cast<std::size_t>(p.rule));
    if (g.atom(p.a).site_role != rule.site_a || g.atom(p.b).site_role != rule.site_b) continue;
    const int ra = find_root(parent, component_of[p.a]);
    const int rb = find_root(parent, component_of[p.b]);
    if (component_of[p.a] != component_of[p.b]) {
      if (ra == rb) continue;  // these frameworks were already joined in this cycle
    } else if (options.min_topological_separation > 0) {
      const auto hops = bond_distances_from(g, g.index_of(p.a), options.min_topological_separation);
      if (hops[static_cast<std::size_t>(g.index_of(p.b))] < options.min_topological_separation) continue;
    }
    const ReactionOutcome outcome = execute_reaction(g, p.a, p.b, rule, &system.box);
    parent[static_cast<std::size_t>(ra)] = rb;
    report.bonds_formed.push_back({p.a, p.b, p.rule, rule.name, p.distance});
    report.byproduct_atoms_removed += static_cast<int>(outcome.removed_atoms.size());
    report.byproduct_mass_removed += outcome.removed_mass;
  }

  if (report.bonds_formed.empty()) return report;
  system.parameterized = false;
  if (!table) {
    system.topology = enumerate_topology(g);
    return report;
  }
  try {
    assign_parameters(system, *table);
  } catch (const MissingEnvironmentError& e) {
    std::string junctions;
    for (const auto& b : report.bonds_formed)
      junctions += (junctions.empty() ? "" : ", ") + std::to_string(b.a) + "-" + std::to_string(b.b);
    throw MissingEnvironmentError(std::string(e.what()) + " (after forming bonds " + junctions +
                                      "; the fragment set lacks a composite covering this junction)",
                                  e.atom_ids(), e.element_context(), e.suggestion());
  }
  return report;
}

void shake_components(MolecularSystem& system, double amplitude, std::uint64_t seed) {
  if (amplitude <= 0.0 || system.graph.empty()) return;
  auto& g = system.graph;
  const ComponentLabels comp = connected_components(g);
  Rng rng(seed);
  // Unwrap each component by walking bonds with minimum-image steps.
  std::vector<Vec3> unwrapped(g.size());
  std::vector<bool> seen(g.size(), false);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(comp.count));
  for (int root = 0; root < static_cast<int>(g.size()); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::deque<int> queue{root};
    seen[static_cast<std::size_t>(root)] = true;
    unwrapped[static_cast<std::size_t>(root)] = g.atom_at(root).position;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      members[static_cast<std::size_t>(comp.label[static_cast<std::size_t>(u)])].push_back(u);
      for (const Neighbor& nb : g.neighbors(u)) {
        if (seen[static_cast<std::size_t>(nb.index)]) continue;
        seen[static_cast<std::size_t>(nb.index)] = true;
        unwrapped[static_cast<std::size_t>(nb.index)] =
            unwrapped[static_cast<std::size_t>(u)] +
            system.box.minimum_image(g.atom_at(nb.index).position - g.atom_at(u).position);
        queue.push_back(nb.index);
      }
    }
  }
  for (const auto& atoms : members) {
    Vec3 centroid{};
    for (int i : atoms) centroid += unwrapped[static_cast<std::size_t>(i)];
    centroid = centroid / static_cast<double>(atoms.size());
    double radius = 0.0;
    for (int i : atoms) radius = std::max(radius, norm(unwrapped[static_cast<std::size_t>(i)] - centroid));
    const Vec3 shift{rng.normal() * amplitude, rng.normal() * amplitude, rng.normal() * amplitude};
    const Vec3 axis = rng.unit_vector();
    // Rotation only for components that fit comfortably in the box, so bonds
    // across periodic images stay intact.
    const bool rotate = radius > 1e-9 && radius < 0.25 * system.box.min_length();
    const double angle = rotate ? rng.normal() * amplitude / radius : 0.0;
    const double c = std::cos(angle), s = std::sin(angle);
    for (int i : atoms) {
      const Vec3 r = unwrapped[static_cast<std::size_t>(i)] - centroid;
      // Rodrigues rotation.
      const Vec3 rotated = r * c + cross(axis, r) * s + axis * (dot(axis, r) * (1.0 - c));
      g.atom_at(i).position = system.box.wrap(centroid + rotated + shift);
    }
  }
}

PolymerizationResult polymerize(MolecularSystem& system, const PolymerizationConfig& config,
                                const ReactionRuleSet& rules, const LookupTable& table, const CycleObserver& observer) {
  if (!(config.cutoff > 0.0)) throw Error(ErrorCode::kConfig, "polymerization cutoff must be positive");
  if (!(config.target_conversion >= 0.0 && config.target_conversion <= 1.0))
    throw Error(ErrorCode::kConfig, "target_conversion must lie in [0, 1]");
  if (config.stall_limit < 1) throw Error(ErrorCode::kConfig, "stall_limit must be >= 1");
  if (config.priority_patience < 1) throw Error(ErrorCode::kConfig, "priority_patience must be >= 1");

  PolymerizationResult result;
  result.state = initial_state(system, rules);
  PolymerizationState& state = result.state;
  if (config.target_conversion <= 0.0) return result;
  update_conversion(state, system, rules);
  if (!system.parameterized) assign_parameters(system, table);

  const int max_bonds =
      config.max_bonds_per_cycle > 0 ? config.max_bonds_per_cycle : std::max(1, state.initial_site_count / 20);
  std::vector<int> priorities;
  for (const auto& r : rules.rules) priorities.push_back(r.priority);
  std::sort(priorities.begin(), priorities.end());
  priorities.erase(std::unique(priorities.begin(), priorities.end()), priorities.end());
  int floor_stall = 0;
  Rng shake_seeds(config.seed);

  while (degree_of_conversion(state) < config.target_conversion && state.stall_counter < config.stall_limit &&
         state.cycle_index < config.max_cycles) {
    ++state.cycle_index;
    const PairSearchResult found = find_reaction_pairs(
        system, rules, {config.cutoff, config.min_topological_separation, state.priority_floor});
    CycleReport report = form_bonds(system, found.pairs, rules, {max_bonds, config.min_topological_separation}, &table);
    report.cycle_index = state.cycle_index;
    report.had_candidates = found.has_candidates;
    report.active_priority = found.active_priority;

    if (report.bonds_formed.empty()) {
      ++state.stall_counter;
      if (++floor_stall >= config.priority_patience) {
        auto next = std::upper_bound(priorities.begin(), priorities.end(), state.priority_floor);
        if (next != priorities.end()) {
          state.priority_floor = *next;
          log::info("priority class ", *next, " becomes eligible at cycle ", state.cycle_index);
        }
        floor_stall = 0;
      }
      shake_components(system, config.shake_amplitude, shake_seeds.next_u64());
    } else {
      state.stall_counter = 0;
      floor_stall = 0;
    }
    if (config.relax_between_cycles && (!report.bonds_formed.empty() || config.shake_amplitude > 0.0)) {
      EnergyModel model(system, config.energy);
      report.energy_after = minimize(system, model, config.relax).final_energy;
    }
    update_conversion(state, system, rules);
    report.conversion_after = degree_of_conversion(state);
    log::info("cycle ", report.cycle_index, ": ", report.bonds_formed.size(), " bonds, conversion ",
              report.conversion_after);
    result.reports.push_back(report);
    if (observer && !observer(system, result.reports.back())) break;
  }
  return result;
}

}  // namespace polygraph
