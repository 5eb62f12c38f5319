// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polygraph/analysis/porosity.h"
#include "polygraph/analysis/tg.h"
#include "polygraph/polymerizer/polymerizer.h"
#include "polygraph/relax/minimize.h"

namespace polygraph {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const CycleReport& report);
nlohmann::json to_json(const PolymerizationResult& result);
nlohmann::json to_json(const PorosityResult& result);
nlohmann::json to_json(const TgResult& result);
nlohmann::json to_json(const MinimizationReport& report);

// Reads the "cycles" array written for a PolymerizationResult.
std::vector<CycleReport> cycle_reports_from_json(std::string_view text, std::string_view source = "<string>");

// Two-space indentation and a trailing newline.
std::string dump_report(const nlohmann::json& j);

}  // namespace polygraph
