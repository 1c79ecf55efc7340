#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "app.hpp"

int main(int argc, char **argv) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return parity::cli::run(argc, argv, {std::cin, std::cout, std::cerr, color});
}
