#include <iostream>

#include "syncswitch/cli.hpp"

int main(int argc, char** argv) { return syncswitch::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
