#include "lathop/run_config.hpp"

int main(int argc, char** argv) { return lathop::cli::cli_main(argc, argv); }
