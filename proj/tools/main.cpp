#include <iostream>

#include "dqalg/cli.hpp"

int main(int argc, char** argv) {
  return dq::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
