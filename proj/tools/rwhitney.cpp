#include <iostream>

#include <rwhitney/cli.hpp>

int main(int argc, char **argv)
{
    return rwhitney::run_cli(argc, argv, std::cout, std::cerr);
}
