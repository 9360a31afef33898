#include <iostream>
#include <vector>

#include "lenscs/cli.hpp"

int main(int argc, char** argv) {
    return lenscs::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
