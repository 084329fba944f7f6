#include "cli.hpp"

int main(int argc, char** argv) { return arcchroma::cli::cli_main(argc, argv); }
