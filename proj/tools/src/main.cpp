#include <iostream>

#include "deviant_cli/cli.hpp"

int main(int argc, char** argv) {
  return deviant::cli::run_cli(argc, argv, std::cout, std::cerr);
}
