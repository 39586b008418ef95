#include <iostream>
#include <variant>

#include "alphatree/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = alphatree::parse_command_line(argc, argv);
  alphatree::RunResult result;
  if (auto* config = std::get_if<alphatree::RunConfig>(&parsed)) {
    result = alphatree::run(*config, std::cin);
  } else {
    result = std::get<alphatree::RunResult>(parsed);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
