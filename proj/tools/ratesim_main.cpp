#include <string>
#include <vector>

#include "ratesim/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ratesim::run_cli(args);
}
