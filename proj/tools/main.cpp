#include "cli.hpp"

int main(int argc, char** argv) { return aft::cli::cli_main(argc, argv); }
