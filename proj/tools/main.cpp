#include <iostream>

#include "iterprimes/cli.hpp"

int main(int argc, char** argv)
{
    return iterprimes::run_cli(argc, argv, std::cout, std::cerr);
}
