#include <iostream>

#include "mtensor_cli/cli.hpp"

int main(int argc, char** argv) {
    return mtensor::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
