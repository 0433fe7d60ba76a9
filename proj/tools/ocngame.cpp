#include <iostream>
#include <string>
#include <vector>

#include "gamelab/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return gamelab::run(args, std::cout, std::cerr);
}
