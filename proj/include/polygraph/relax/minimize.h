// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polygraph/relax/energy.h"
#include "polygraph/simbox/system.h"

namespace polygraph {

enum class MinimizerMethod { kSteepestDescent, kFire };

MinimizerMethod minimizer_method_from_name(const std::string& name);

struct MinimizerConfig {
  MinimizerMethod method = MinimizerMethod::kFire;
  double force_tolerance = 1.0;  // kcal/mol/A, on the largest atomic force
  int max_steps = 1000;
  double max_step_length = 0.2;  // angstrom per atom per step
};

struct MinimizationReport {
  int steps = 0;  // accepted steps
  double initial_energy = 0.0;
  double final_energy = 0.0;
  double max_force = 0.0;
  bool converged = false;
  std::vector<double> energy_trace;  // energy after each accepted step, starting with the initial one
};

// Moves atoms downhill; rejected trial steps never enter the trace, so the
// trace is nonincreasing. Positions are wrapped on return.
MinimizationReport minimize(MolecularSystem& system, EnergyModel& model, const MinimizerConfig& config);
MinimizationReport minimize(MolecularSystem& system, const EnergyOptions& options,
                            const MinimizerConfig& config);

}  // namespace polygraph
