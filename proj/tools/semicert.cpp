#include "semicert/cli.hpp"

int main(int argc, char** argv) { return semicert::cli::main(argc, argv); }
