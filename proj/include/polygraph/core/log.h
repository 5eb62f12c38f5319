// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <string>

namespace polygraph::log {

enum class Level { kQuiet = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

void set_level(Level level);
Level level();
void write(Level level, const std::string& message);

template <typename... Args>
void warn(const Args&... args) {
  if (level() < Level::kWarn) return;
  std::ostringstream out;
  (out << ... << args);
  write(Level::kWarn, out.str());
}

template <typename... Args>
void info(const Args&... args) {
  if (level() < Level::kInfo) return;
  std::ostringstream out;
  (out << ... << args);
  write(Level::kInfo, out.str());
}

}  // namespace polygraph::log
