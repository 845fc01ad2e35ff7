#include <iostream>
#include <string>
#include <vector>

#include "solcon/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = solcon::cli::run(args);
  std::cout << result.payload;
  return result.exit_code;
}
