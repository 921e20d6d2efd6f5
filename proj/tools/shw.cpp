// CLI front end; full subcommand wiring lives in include/shw/cli.hpp.
#include "shw/cli.hpp"

int main(int argc, char** argv) { return shw::cli::run(argc, argv); }
