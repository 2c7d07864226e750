#include <iostream>
#include <string>
#include <vector>

#include "trimeval_tools/cli.hpp"

int main(int argc, char** argv) {
    return trimeval::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
