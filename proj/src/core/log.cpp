// SPDX-License-Identifier: Apache-2.0
#include "polygraph/core/log.h"

#include <atomic>
#include <iostream>

#include "polygraph/core/error.h"

namespace polygraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kUnsupportedElement: return "E_UNSUPPORTED_ELEMENT";
    case ErrorCode::kOverValence: return "E_OVER_VALENCE";
    case ErrorCode::kUnknownAtom: return "E_UNKNOWN_ATOM";
    case ErrorCode::kConfig: return "E_CONFIG";
    case ErrorCode::kConflict: return "E_PARAMETER_CONFLICT";
    case ErrorCode::kMissingEnvironment: return "E_MISSING_ENVIRONMENT";
    case ErrorCode::kPackingDensity: return "E_PACKING_DENSITY";
    case ErrorCode::kUndefinedConversion: return "E_UNDEFINED_CONVERSION";
    case ErrorCode::kNonFiniteEnergy: return "E_NONFINITE_ENERGY";
    case ErrorCode::kUnparameterized: return "E_UNPARAMETERIZED";
    case ErrorCode::kFormat: return "E_FORMAT";
    case ErrorCode::kUnsupportedStyle: return "E_UNSUPPORTED_STYLE";
    case ErrorCode::kIo: return "E_IO";
  }
  return "E_UNKNOWN";
}

int error_exit_status(ErrorCode code) {
  // 0 = success, 1 = unexpected failure, 2 = usage.
  return 10 + static_cast<int>(code);
}

namespace log {
namespace {
std::atomic<Level> g_level{Level::kWarn};
}

void set_level(Level level) { g_level = level; }

Level level() { return g_level; }

void write(Level level, const std::string& message) {
  const char* tag = level == Level::kWarn ? "warning" : (level == Level::kInfo ? "info" : "debug");
  std::cerr << "polygraph " << tag << ": " << message << '\n';
}

}  // namespace log
}  // namespace polygraph
