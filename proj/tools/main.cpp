#include "fuzzystar/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return fuzzystar::run_cli(argc, argv, std::cout, std::cerr);
}
