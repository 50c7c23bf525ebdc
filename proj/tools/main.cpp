#include <iostream>
#include <string>
#include <vector>

#include "dpo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = dpo::cli::dispatch(args);
  std::cout << outcome.payload.dump(2) << "\n";
  return dpo::cli::exit_code(outcome.status);
}
