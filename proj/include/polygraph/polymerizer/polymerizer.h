// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "polygraph/fftyping/lookup_table.h"
#include "polygraph/polymerizer/pair_search.h"
#include "polygraph/polymerizer/reaction.h"
#include "polygraph/relax/energy.h"
#include "polygraph/relax/minimize.h"
#include "polygraph/simbox/system.h"

namespace polygraph {

struct PolymerizationConfig {
  double cutoff = 5.0;
  int max_bonds_per_cycle = 0;  // 0: max(1, initial_site_count / 20)
  int min_topological_separation = 6;
  double target_conversion = 0.8;
  int stall_limit = 20;
  // Cycles without a bond before higher-priority-number classes become eligible.
  int priority_patience = 1;
  int max_cycles = 100000;
  bool relax_between_cycles = true;
  MinimizerConfig relax{MinimizerMethod::kFire, 1.0, 200, 0.2};
  EnergyOptions energy;
  // Rigid random moves of each fragment after a cycle without bonds (angstrom).
  double shake_amplitude = 0.0;
  std::uint64_t seed = 1;
};

struct PolymerizationState {
  int initial_site_count = 0;
  int reacted_site_count = 0;
  int cycle_index = 0;
  int stall_counter = 0;
  int priority_floor = 0;
  // Ids of the sites that count toward conversion, with their labels at start.
  std::vector<int> counted_sites;
};

struct FormedBond {
  int a = -1;
  int b = -1;
  int rule = -1;
  std::string rule_name;
  double distance = 0.0;
};

struct CycleReport {
  int cycle_index = 0;
  std::vector<FormedBond> bonds_formed;
  int byproduct_atoms_removed = 0;
  double byproduct_mass_removed = 0.0;  // amu
  double conversion_after = 0.0;
  bool had_candidates = false;
  int active_priority = 0;
  double energy_after = 0.0;  // kcal/mol, after relaxation (0 when not relaxed)
};

// Counts the initial sites (restricted to rules.conversion_site_types when
// given), each weighted by its capacity along transform chains.
PolymerizationState initial_state(const MolecularSystem& system, const ReactionRuleSet& rules);

// Recomputes reacted_site_count from the current site labels.
void update_conversion(PolymerizationState& state, const MolecularSystem& system, const ReactionRuleSet& rules);

// reacted / initial; throws kUndefinedConversion when there are no sites.
double degree_of_conversion(const PolymerizationState& state);

struct FormBondsOptions {
  int max_bonds = 1;
  int min_topological_separation = 6;
};

// Executes up to max_bonds pairs in order. Components are joined at most once
// per cycle and same-component pairs are re-checked against the current
// graph. Re-enumerates topology and reassigns parameters when the table is
// given; a missing environment is reported with the junction atom ids.
CycleReport form_bonds(MolecularSystem& system, const std::vector<CandidatePair>& pairs,
                       const ReactionRuleSet& rules, const FormBondsOptions& options,
                       const LookupTable* table);

struct PolymerizationResult {
  std::vector<CycleReport> reports;
  PolymerizationState state;
};

// Called after each cycle; returning false stops the run early.
using CycleObserver = std::function<bool(const MolecularSystem&, const CycleReport&)>;

PolymerizationResult polymerize(MolecularSystem& system, const PolymerizationConfig& config,
                                const ReactionRuleSet& rules, const LookupTable& table,
                                const CycleObserver& observer = nullptr);

// Random rigid translation and rotation of every connected component.
void shake_components(MolecularSystem& system, double amplitude, std::uint64_t seed);

}  // namespace polygraph
