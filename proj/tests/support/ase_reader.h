// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace polygraph::testing {

// Summary of a LAMMPS data file as parsed by ASE, or nullopt when python3 or
// ASE is unavailable.
inline std::optional<nlohmann::json> ase_summary(const std::filesystem::path& data_file) {
  const std::string cmd = "python3 " + (std::filesystem::path(POLYGRAPH_TEST_TOOLS) / "ase_check.py").string() +
                          " '" + data_file.string() + "' 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  if (status != 0 || out.empty()) return std::nullopt;
  return nlohmann::json::parse(out);
}

}  // namespace polygraph::testing
