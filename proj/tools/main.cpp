#include <iostream>
#include <string>
#include <vector>

#include "curved_landau/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return curved_landau::cli::run(args, std::cout, std::cerr);
}
