#include <iostream>
#include <string>
#include <vector>

#include "tanglekit/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return tanglekit::run_cli(args, std::cout, std::cerr);
}
