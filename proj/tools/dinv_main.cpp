#include <iostream>
#include <string>
#include <vector>

#include "dinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = dinv::cli::run(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
