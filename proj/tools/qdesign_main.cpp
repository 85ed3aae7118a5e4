#include <iostream>

#include "qdesign/cli.hpp"

int main(int argc, char** argv) {
  return qdesign::cli_main(argc, argv, std::cout, std::cerr);
}
