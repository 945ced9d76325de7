#include <iostream>

#include "qcollatz/cli.hpp"

int main(int argc, char** argv) {
  return qcollatz::cli::run(argc, argv, std::cout, std::cerr);
}
