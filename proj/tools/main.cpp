#include <iostream>

#include "koornwinder/cli.hpp"

int main(int argc, char** argv) { return kw::cli::run(argc, argv, std::cout, std::cerr); }
