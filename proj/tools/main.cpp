#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  try {
    return nsp::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return nsp::cli::kExitInternal;
  }
}
