#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return troman::cli::run(args, std::cin, std::cout, std::cerr);
}
