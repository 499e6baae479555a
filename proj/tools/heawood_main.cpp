#include "heawood/cli.hpp"

int main(int argc, char** argv) { return heawood::cli::run(argc, argv); }
