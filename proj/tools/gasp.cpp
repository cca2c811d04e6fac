#include "gasp/cli.hpp"

int main(int argc, char** argv) { return gasp::cli::main_entry(argc, argv); }
