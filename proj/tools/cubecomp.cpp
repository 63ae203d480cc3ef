#include <iostream>

#include <cubecomp/cli.hpp>

int main(int argc, char ** argv)
{
    return cubecomp::cli::run(argc, argv, std::cout, std::cerr);
}
