#include "expcircle/cli.hpp"

int main(int argc, char** argv) { return expcircle::run_cli(argc, argv); }
