#include "qrep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qrep::run_cli(argc, argv, std::cout, std::cerr); }
