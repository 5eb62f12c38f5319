// SPDX-License-Identifier: Apache-2.0
#include "polygraph/io/reports.h"

#include "polygraph/core/error.h"

namespace polygraph {

using nlohmann::json;

json to_json(const CycleReport& r) {
  json bonds = json::array();
  for (const FormedBond& b : r.bonds_formed)
    bonds.push_back({{"a", b.a}, {"b", b.b}, {"rule", b.rule_name}, {"distance", b.distance}});
  return {{"cycle", r.cycle_index},
          {"bonds_formed", std::move(bonds)},
          {"byproduct_atoms_removed", r.byproduct_atoms_removed},
          {"byproduct_mass_removed", r.byproduct_mass_removed},
          {"conversion", r.conversion_after},
          {"had_candidates", r.had_candidates},
          {"active_priority", r.active_priority},
          {"energy_after", r.energy_after}};
}

json to_json(const PolymerizationResult& result) {
  json cycles = json::array();
  for (const CycleReport& r : result.reports) cycles.push_back(to_json(r));
  const PolymerizationState& s = result.state;
  return {{"schema_version", kReportSchemaVersion},
          {"initial_site_count", s.initial_site_count},
          {"reacted_site_count", s.reacted_site_count},
          {"conversion", s.initial_site_count > 0 ? static_cast<double>(s.reacted_site_count) / s.initial_site_count : 0.0},
          {"cycles_run", s.cycle_index},
          {"cycles", std::move(cycles)}};
}

json to_json(const PorosityResult& r) {
  return {{"pore_fraction", r.pore_fraction},
          {"pore_volume", r.pore_volume},
          {"surface_area", r.surface_area},
          {"probe_radius", r.probe_radius},
          {"volume_samples", r.volume_samples},
          {"pore_hits", r.pore_hits},
          {"surface_points_per_atom", r.surface_points_per_atom},
          {"seed", r.seed},
          {"standard_error", r.standard_error}};
}

json to_json(const TgResult& r) {
  return {{"tg", r.tg},
          {"glassy_slope", r.glassy_slope},
          {"rubbery_slope", r.rubbery_slope},
          {"glassy_intercept", r.glassy_intercept},
          {"rubbery_intercept", r.rubbery_intercept},
          {"sse", r.sse},
          {"split", r.split},
          {"degenerate", r.degenerate}};
}

json to_json(const MinimizationReport& r) {
  return {{"steps", r.steps},
          {"initial_energy", r.initial_energy},
          {"final_energy", r.final_energy},
          {"max_force", r.max_force},
          {"converged", r.converged}};
}

std::vector<CycleReport> cycle_reports_from_json(std::string_view text, std::string_view source) {
  std::vector<CycleReport> out;
  try {
    const json j = json::parse(text);
    if (j.value("schema_version", 0) != kReportSchemaVersion)
      throw Error(ErrorCode::kFormat, std::string(source) + ": unsupported report schema_version");
    for (const json& c : j.at("cycles")) {
      CycleReport r;
      r.cycle_index = c.at("cycle").get<int>();
      for (const json& b : c.at("bonds_formed")) {
        FormedBond fb;
        fb.a = b.at("a").get<int>();
        fb.b = b.at("b").get<int>();
        fb.rule_name = b.at("rule").get<std::string>();
        fb.distance = b.at("distance").get<double>();
        r.bonds_formed.push_back(std::move(fb));
      }
      r.byproduct_atoms_removed = c.at("byproduct_atoms_removed").get<int>();
      r.byproduct_mass_removed = c.at("byproduct_mass_removed").get<double>();
      r.conversion_after = c.at("conversion").get<double>();
      r.had_candidates = c.at("had_candidates").get<bool>();
      r.active_priority = c.at("active_priority").get<int>();
      r.energy_after = c.at("energy_after").get<double>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string(source) + ": " + e.what());
  }
  return out;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace polygraph
