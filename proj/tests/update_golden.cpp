// Rewrites tests/golden from the current CLI. Review the diff before
// committing.
#include <fstream>
#include <iostream>

#include "support/cli_matrix.hpp"

int main() {
  using namespace nilmult::testing;
  for (const auto& section : golden_sections()) {
    const auto path = golden_path(section.name);
    std::ofstream(path, std::ios::binary) << transcript(section.commands);
    std::cout << "wrote " << path << '\n';
  }
}
