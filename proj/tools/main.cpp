#include "cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env;
    if (const char* v = std::getenv("THERMIFACE_MATERIALS"); v != nullptr && *v != '\0') {
        env = v;
    }
    return thermiface::cli::run(args, {std::cout, std::cerr, env});
}
