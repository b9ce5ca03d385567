#include <iostream>
#include <variant>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace ultrafid::cli;
  const ParseOutcome parsed = parse(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), std::cout, std::cerr);
}
