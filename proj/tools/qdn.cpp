#include <iostream>
#include <string>
#include <vector>

#include "qdn/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qdn::cli::dispatch(args, std::cout, std::cerr);
}
