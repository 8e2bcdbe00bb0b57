#include "kratzer/cli.hpp"
#include <iostream>

int main(int argc, char **argv) {
  return kratzer::cli::run(argc, argv, std::cout, std::cerr);
}
