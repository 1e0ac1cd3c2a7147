#include <iostream>

#include "ctxw/cli.hpp"

int main(int argc, char** argv) {
    return ctxw::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
