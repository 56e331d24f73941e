#include <iostream>

#include <wpnlab/cli.hpp>

int main(int argc, char** argv) { return wpnlab::run_cli(argc, argv, std::cout, std::cerr); }
