// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polygraph {

// Every failure category carries a stable machine-readable code; the CLI maps
// each one to its own exit status.
enum class ErrorCode {
  kParse,
  kUnsupportedElement,
  kOverValence,
  kUnknownAtom,
  kConfig,
  kConflict,
  kMissingEnvironment,
  kPackingDensity,
  kUndefinedConversion,
  kNonFiniteEnergy,
  kUnparameterized,
  kFormat,
  kUnsupportedStyle,
  kIo,
};

std::string_view error_code_name(ErrorCode code);
int error_exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::kParse, message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class MissingEnvironmentError : public Error {
 public:
  MissingEnvironmentError(const std::string& message, std::vector<int> atom_ids,
                          std::string element_context, std::string suggestion)
      : Error(ErrorCode::kMissingEnvironment, message),
        atom_ids_(std::move(atom_ids)),
        element_context_(std::move(element_context)),
        suggestion_(std::move(suggestion)) {}

  const std::vector<int>& atom_ids() const noexcept { return atom_ids_; }
  const std::string& element_context() const noexcept { return element_context_; }
  // Fragment whose depth-1-shallower environment matches, or empty.
  const std::string& suggestion() const noexcept { return suggestion_; }

 private:
  std::vector<int> atom_ids_;
  std::string element_context_;
  std::string suggestion_;
};

}  // namespace polygraph
