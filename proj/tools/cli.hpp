#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace thermiface::cli {

enum ExitCode : int {
    Success = 0,
    InternalFailure = 1,
    ValidationFailure = 2,
    InfeasibleFailure = 3,
    IoFailure = 4,
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    // Value of THERMIFACE_MATERIALS, if set; --materials-file wins.
    std::optional<std::string> materials_env;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, Context ctx);

} // namespace thermiface::cli
