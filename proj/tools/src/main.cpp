#include "holesat_app/cli.hpp"

int main(int argc, char** argv) { return holesat::app::run_cli(argc, argv); }
