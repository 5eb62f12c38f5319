// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polygraph {

// Entry point of the polygraph command line. Returns 0 on success, 2 on
// usage errors and error_exit_status(code) for failures, after printing one
// line of the form "polygraph: error[E_CODE]: message" to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace polygraph
