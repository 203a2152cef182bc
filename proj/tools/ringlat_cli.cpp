#include <iostream>

#include "ringlat/app/commands.hpp"

int main(int argc, char** argv) { return ringlat::app::run_cli(argc, argv, std::cout, std::cerr); }
