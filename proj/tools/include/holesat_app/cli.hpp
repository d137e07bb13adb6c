#pragma once

namespace holesat::app {

/// Entry point of the holesat command; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace holesat::app
