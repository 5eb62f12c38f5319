// SPDX-License-Identifier: Apache-2.0
// Fills a graphs-only fragment library (as written by `polygraph composites`)
// with the demo force field, producing a library the lookup table accepts.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polygraph/core/error.h"
#include "polygraph/demoff/demo_forcefield.h"
#include "polygraph/io/atomic_file.h"

int main(int argc, char** argv) {
  CLI::App app{"Parameterize fragment graphs with the demo force field", "polygraph-demoff"};
  std::string input, output;
  app.add_option("-i,--input", input, "Graphs-only fragment library")->required();
  app.add_option("-o,--output", output, "Parameterized fragment library")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    std::vector<polygraph::FragmentSpec> out;
    for (const polygraph::FragmentSpec& f : polygraph::load_fragments(input)) {
      polygraph::FragmentSpec p = polygraph::demoff::parameterize(f.graph, f.name);
      p.provenance = "demo force field";
      out.push_back(std::move(p));
    }
    polygraph::write_file_atomic(output, polygraph::fragment_library_to_json(out));
  } catch (const polygraph::Error& e) {
    std::cerr << "polygraph-demoff: error[" << polygraph::error_code_name(e.code()) << "]: " << e.what() << "\n";
    return polygraph::error_exit_status(e.code());
  }
  return 0;
}
