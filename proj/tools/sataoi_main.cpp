#include "sataoi/cli.hpp"

int main(int argc, char** argv) { return sataoi::cli::main(argc, argv); }
