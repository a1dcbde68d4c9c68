// focuslog_main.cpp - entry point for the focuslog binary
#include <iostream>
#include <string>
#include <vector>

#include "focuslog/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return focuslog::cli::run(args, std::cin, std::cout, std::cerr);
}
