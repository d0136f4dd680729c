#include <iostream>
#include <string>
#include <vector>

#include "pk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pk::cli::dispatch(args, std::cout);
}
