// SPDX-License-Identifier: Apache-2.0

#include "drs/cli/commands.hpp"

int main(int argc, char** argv) { return drs::cli::run_cli(argc, argv); }
