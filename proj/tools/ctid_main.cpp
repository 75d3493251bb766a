#include <iostream>

#include <ctid/cli.hpp>

int main(int argc, char **argv)
{
    return ctid::main_entry(argc, argv, std::cout, std::cerr);
}
