#include <iostream>

#include "pbundle/cli.hpp"

int main(int argc, char** argv) { return pbundle::runCli(argc, argv, std::cout, std::cerr); }
