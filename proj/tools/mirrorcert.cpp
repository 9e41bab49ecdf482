#include "mirrorcert/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mirrorcert::cli::run(argc, argv, std::cout, std::cerr);
}
