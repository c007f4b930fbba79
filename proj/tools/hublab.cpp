#include "hublab/cli.hpp"

int main(int argc, char** argv) { return hublab::cli::run(argc, argv); }
