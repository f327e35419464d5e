#include <iostream>

#include "polylink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = polylink::cli::run(args, std::cin);
  std::cout << r.payload;
  std::cerr << r.diagnostics;
  return r.exit_code;
}
