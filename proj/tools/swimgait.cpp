#include "swimgait/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return swimgait::cli::run(argc, argv, std::cout, std::cerr);
}
