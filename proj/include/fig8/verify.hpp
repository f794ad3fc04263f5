#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fig8/config.hpp"
#include "fig8/surgery.hpp"

namespace fig8 {

struct CheckOutcome {
    std::string name;
    bool passed = true;
    double max_residual = 0.0;  // largest observed error, in the check's own metric
    double threshold = 0.0;
    std::size_t cases = 0;
};

struct VerifyOptions {
    std::size_t samples = 200;  // random variety points (each used on both branches)
    std::uint64_t seed = 7;
    Tolerances tol;
    SolverOptions solver;
    int max_slope = 5;          // surgery checks cover coprime |p|, |q| <= max_slope
};

/// Runs every self-consistency check: fixed fixtures first (the geometric
/// point s = 1 among them), then `samples` random points. Deterministic for a
/// given seed.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

/// One line per check plus a closing tally; byte-identical for identical input.
void print_verification(std::ostream& os, const std::vector<CheckOutcome>& outcomes);

bool all_passed(const std::vector<CheckOutcome>& outcomes) noexcept;

} // namespace fig8
