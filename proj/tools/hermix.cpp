// hermix: generate family tables, expand polynomials in the Hermite basis
// and run closed-form verification sweeps. See `hermix --help`.

#include <iostream>
#include <string>
#include <vector>

#include "hermix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const hermix::cli::CliResult result = hermix::cli::run_args(std::move(args));
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
