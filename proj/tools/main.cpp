#include <iostream>

#include "ahyp/cli/app.hpp"

int main(int argc, char** argv) {
  return ahyp::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
