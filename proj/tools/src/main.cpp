#include <iostream>

#include "homcoh/cli/commands.hpp"

int main(int argc, char** argv) { return homcoh::cli::run(argc, argv, std::cout, std::cerr); }
