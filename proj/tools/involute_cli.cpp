#include "involute/cli.hpp"

int main(int argc, char** argv) { return involute::cli::run(argc, argv); }
