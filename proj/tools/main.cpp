#include "cli.hpp"

int main(int argc, char** argv) { return imprim::cli::main_entry(argc, argv); }
