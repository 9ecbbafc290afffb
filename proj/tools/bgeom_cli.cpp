#include "bgeom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const bgeom::cli::Outcome outcome = bgeom::cli::run(args);
  std::cout << outcome.output;
  return outcome.exit_code;
}
