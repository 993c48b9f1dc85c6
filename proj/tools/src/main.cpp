#include <iostream>

#include "hforge/cli.hpp"

int main(int argc, char** argv) { return hforge::cli::dispatch(argc, argv, std::cout, std::cerr); }
