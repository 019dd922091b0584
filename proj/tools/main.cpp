#include <iostream>

#include "lamsol/cli.hpp"

int main(int argc, char** argv) { return lamsol::cli::run(argc, argv, std::cout, std::cerr); }
