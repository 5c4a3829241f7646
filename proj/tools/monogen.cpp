#include <iostream>
#include <vector>

#include "mono/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return mono::cli_run(args, std::cout, std::cerr);
}
