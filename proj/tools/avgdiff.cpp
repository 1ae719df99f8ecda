#include "avgdiff/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return avgdiff::cli::run_cli(argc, argv, std::cout, std::cerr);
}
