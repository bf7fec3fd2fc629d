#include "netmult/cli.hpp"

int main(int argc, char** argv) { return netmult::run_cli(argc, argv); }
