// SPDX-License-Identifier: Apache-2.0
#include "polygraph/io/cli.h"

int main(int argc, char** argv) { return polygraph::run_cli(argc, argv); }
