#include <vector>

#include "welllines/cli.hpp"

int main(int argc, char** argv) {
  return welllines::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
