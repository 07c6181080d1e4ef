#include "lginv/cli.hpp"

int main(int argc, char** argv) { return lginv::cli::run(argc, argv); }
