#include "windlab/cli.hpp"

int main(int argc, char** argv) { return windlab::cli::run(argc, argv); }
