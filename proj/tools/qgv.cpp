#include <iostream>

#include "qgv/cli.hpp"

int main(int argc, char** argv) {
  return qgv::cli::run(argc, argv, std::cout, std::cerr);
}
