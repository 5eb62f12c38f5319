// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polygraph/polymerizer/polymerizer.h"
#include "polygraph/simbox/pack.h"

namespace polygraph {

inline constexpr int kRunConfigSchemaVersion = 1;

struct MonomerCount {
  std::filesystem::path file;
  int count = 0;
};

struct RunConfig {
  // Exactly one of box / density.
  std::optional<std::array<double, 3>> box;
  std::optional<double> density;  // g/cm^3
  std::vector<MonomerCount> monomers;
  std::filesystem::path rules;
  std::vector<std::filesystem::path> fragments;
  std::string forcefield = "gaff";
  int lookup_depth = 4;
  PackOptions pack;
  PolymerizationConfig polymerization;
  std::filesystem::path output_data;    // final structure
  std::filesystem::path output_report;  // cycle reports
  std::uint64_t seed = 1;
  int threads = 1;
};

// Relative paths resolve against `base_dir`. Unknown keys, missing files and
// violated invariants raise kConfig. The force-field family sets the
// nonbonded conventions before any explicit "energy" overrides apply.
RunConfig run_config_from_json(std::string_view text, const std::filesystem::path& base_dir,
                               std::string_view source = "<string>");
RunConfig load_run_config(const std::filesystem::path& path);

// POLYGRAPH_SEED and POLYGRAPH_THREADS override the file values.
void apply_environment_overrides(RunConfig& config);

// Propagates config.seed into the packing and polymerization stages.
void set_seed(RunConfig& config, std::uint64_t seed);

}  // namespace polygraph
