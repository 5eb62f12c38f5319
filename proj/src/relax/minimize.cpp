// SPDX-License-Identifier: Apache-2.0
#include "polygraph/relax/minimize.h"

#include <algorithm>
#include <cmath>

#include "polygraph/core/error.h"

namespace polygraph {
namespace {

double max_norm(const std::vector<Vec3>& v) {
  double m = 0.0;
  for (const Vec3& x : v) m = std::max(m, norm2(x));
  return std::sqrt(m);
}

void apply(MolecularSystem& s, const std::vector<Vec3>& start, const std::vector<Vec3>& delta) {
  for (std::size_t i = 0; i < start.size(); ++i) s.graph.atom_at(static_cast<int>(i)).position = start[i] + delta[i];
}

std::vector<Vec3> positions(const MolecularSystem& s) {
  std::vector<Vec3> out;
  out.reserve(s.graph.size());
  for (const Atom& a : s.graph.atoms()) out.push_back(a.position);
  return out;
}

// Scales a displacement field so no atom moves farther than `limit`.
void cap_displacement(std::vector<Vec3>& delta, double limit) {
  const double m = max_norm(delta);
  if (m > limit) {
    const double scale = limit / m;
    for (Vec3& d : delta) d *= scale;
  }
}

constexpr double kMinimumStepScale = 1e-14;

MinimizationReport steepest_descent(MolecularSystem& s, EnergyModel& model, const MinimizerConfig& c,
                                    MinimizationReport report, std::vector<Vec3> forces) {
  double energy = report.initial_energy;
  double alpha = c.max_step_length / std::max(max_norm(forces), 1e-12);
  std::vector<Vec3> delta(forces.size());
  std::vector<Vec3> trial_forces;
  int evaluations = 0;
  while (report.steps < c.max_steps && evaluations < 20 * c.max_steps) {
    if (max_norm(forces) <= c.force_tolerance) break;
    const std::vector<Vec3> start = positions(s);
    for (std::size_t i = 0; i < forces.size(); ++i) delta[i] = forces[i] * alpha;
    cap_displacement(delta, c.max_step_length);
    apply(s, start, delta);
    ++evaluations;
    const double trial = model.evaluate(s, &trial_forces).total();
    if (trial < energy) {
      energy = trial;
      forces.swap(trial_forces);
      report.energy_trace.push_back(energy);
      ++report.steps;
      alpha *= 1.2;
    } else {
      apply(s, start, std::vector<Vec3>(start.size()));
      alpha *= 0.5;
      if (alpha * std::max(max_norm(forces), 1e-12) < kMinimumStepScale) break;
    }
  }
  report.final_energy = energy;
  report.max_force = max_norm(forces);
  return report;
}

MinimizationReport fire(MolecularSystem& s, EnergyModel& model, const MinimizerConfig& c,
                        MinimizationReport report, std::vector<Vec3> forces) {
  // Unit masses; dt in arbitrary time units.
  constexpr double kAlphaStart = 0.1, kFInc = 1.1, kFDec = 0.5, kFAlpha = 0.99;
  constexpr int kNMin = 5;
  const std::size_t n = forces.size();
  double energy = report.initial_energy;
  double dt_max = 1.0;
  double dt = 0.1;
  double alpha = kAlphaStart;
  int since_negative = 0;
  std::vector<Vec3> v(n), delta(n), trial_forces;
  int evaluations = 0;
  while (report.steps < c.max_steps && evaluations < 20 * c.max_steps) {
    if (max_norm(forces) <= c.force_tolerance) break;
    double pw = 0.0, vv = 0.0, ff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pw += dot(forces[i], v[i]);
      vv += norm2(v[i]);
      ff += norm2(forces[i]);
    }
    if (pw > 0.0) {
      const double scale = std::sqrt(vv / ff);
      for (std::size_t i = 0; i < n; ++i) v[i] = v[i] * (1.0 - alpha) + forces[i] * (alpha * scale);
      if (++since_negative > kNMin) {
        dt = std::min(dt * kFInc, dt_max);
        alpha *= kFAlpha;
      }
    } else {
      for (Vec3& x : v) x = Vec3{};
      dt *= kFDec;
      alpha = kAlphaStart;
      since_negative = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      v[i] += forces[i] * dt;
      delta[i] = v[i] * dt;
    }
    cap_displacement(delta, c.max_step_length);
    const std::vector<Vec3> start = positions(s);
    apply(s, start, delta);
    ++evaluations;
    const double trial = model.evaluate(s, &trial_forces).total();
    if (trial <= energy) {
      energy = trial;
      forces.swap(trial_forces);
      report.energy_trace.push_back(energy);
      ++report.steps;
    } else {
      apply(s, start, std::vector<Vec3>(n));
      for (Vec3& x : v) x = Vec3{};
      dt *= kFDec;
      alpha = kAlphaStart;
      since_negative = 0;
      if (dt * std::max(max_norm(forces), 1e-12) * dt < kMinimumStepScale) break;
    }
  }
  report.final_energy = energy;
  report.max_force = max_norm(forces);
  return report;
}

}  // namespace

MinimizerMethod minimizer_method_from_name(const std::string& name) {
  if (name == "fire") return MinimizerMethod::kFire;
  if (name == "sd" || name == "steepest_descent") return MinimizerMethod::kSteepestDescent;
  throw Error(ErrorCode::kConfig, "unknown minimizer method '" + name + "'");
}

MinimizationReport minimize(MolecularSystem& s, EnergyModel& model, const MinimizerConfig& c) {
  if (!(c.force_tolerance > 0.0)) throw Error(ErrorCode::kConfig, "force_tolerance must be positive");
  if (!(c.max_step_length > 0.0)) throw Error(ErrorCode::kConfig, "max_step_length must be positive");
  MinimizationReport report;
  std::vector<Vec3> forces;
  report.initial_energy = model.evaluate(s, &forces).total();
  report.energy_trace.push_back(report.initial_energy);
  report = c.method == MinimizerMethod::kFire ? fire(s, model, c, std::move(report), std::move(forces))
                                              : steepest_descent(s, model, c, std::move(report), std::move(forces));
  report.converged = report.max_force <= c.force_tolerance;
  wrap_positions(s);
  return report;
}

MinimizationReport minimize(MolecularSystem& system, const EnergyOptions& options, const MinimizerConfig& config) {
  EnergyModel model(system, options);
  return minimize(system, model, config);
}

}  // namespace polygraph
