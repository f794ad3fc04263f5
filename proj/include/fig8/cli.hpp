#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fig8/config.hpp"
#include "fig8/surgery.hpp"

namespace fig8::cli {

enum class OutputFormat { pretty, json, csv };

/// Everything a run can be configured with. A JSON config file may set any
/// of these keys; command-line flags override the file.
///   tol_variety, tol_compare, tol_degenerate, solver_tol, grid_circles,
///   grid_angles, max_iterations, format, seed, samples
struct RunConfig {
    Tolerances tol;
    SolverOptions solver;
    OutputFormat format = OutputFormat::pretty;
    std::uint64_t seed = 7;
    std::size_t samples = 200;
};

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kVerificationFailed = 3,
};

/// Reads a JSON config file over `base`. Throws ParseError.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fig8::cli
