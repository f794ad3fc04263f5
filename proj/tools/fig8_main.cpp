#include <iostream>
#include <string>
#include <vector>

#include "fig8/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fig8::cli::run(args, std::cout, std::cerr);
}
