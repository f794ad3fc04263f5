#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fig8/config.hpp"
#include "fig8/riley.hpp"

namespace fig8 {

/// Surgery coefficient p/q: the relation x^p l^q = 1 is added to the knot group.
struct SurgerySlope {
    int p = 1;
    int q = 0;
};

/// Validates gcd(|p|, |q|) = 1 (which also excludes (0, 0)); throws InvalidSlope.
SurgerySlope make_slope(int p, int q);

/// Starting points: s on circles of the given radii, `angles` equally spaced
/// arguments per circle (offset by half a step so no seed sits on the real
/// axis), and both t-branches above each s.
struct SeedGrid {
    std::vector<double> radii{0.5, 1.0, 2.0};
    int angles = 24;
};

struct SolverOptions {
    SeedGrid grid;
    double tol = 1e-9;             // bound on |R12| and ||rho(x)^p rho(l)^q - E||
    int max_iterations = 50;
    double parabolic_tol = 1e-6;   // |s^2 - 1| below this: rho(x) is parabolic
    double degenerate_tol = 1e-6;  // |u^2 - 5| or |u| below this: formula degenerates
};

struct SurgerySolution {
    RileyPoint point;
    Cx u{0.0};
    Cx trace_longitude{0.0};
    Cx lambda{0.0};              // eigenvalue of rho(l) on the s-eigenvector of rho(x)
    double variety_residual = 0.0;
    double relation_residual = 0.0;  // ||rho(x)^p rho(l)^q - E||
    double scalar_residual = 0.0;    // |s^p lambda^q - 1|
    std::optional<Cx> torsion;   // 2(u-1)/(u^2(u^2-5)); absent when degenerate
    bool parabolic = false;
    bool degenerate = false;
    bool reducible = false;
};

/// Flags in a fixed order: "parabolic", "degenerate", "reducible".
std::vector<std::string> solution_flags(const SurgerySolution& s);

struct SeedFailure {
    std::size_t seed_index = 0;
    Cx seed_s{0.0};
    Branch branch = Branch::plus;
    std::string reason;  // NoConvergence, diverged, rejected by the matrix check, ...
};

struct SurgeryResult {
    SurgerySlope slope;
    std::size_t seeds = 0;
    std::vector<SurgerySolution> solutions;  // deduplicated, canonical order
    std::vector<SeedFailure> failures;
};

/// l11: on the variety rho(l) is upper triangular (it commutes with rho(x)),
/// so this is the longitude eigenvalue paired with s. Throws OffVariety when
/// |l21| > tol * max(1, max |l_ij|).
Cx aligned_longitude_eigenvalue(const RileyPoint& p, double tol = 1e-8);

struct RelationResidual {
    Cx scalar;      // s^p lambda^q - 1
    double matrix;  // ||rho(x)^p rho(l)^q - E||, Frobenius, rho(l) from the word
};

RelationResidual surgery_residual(const RileyPoint& p, SurgerySlope slope);

/// Newton iteration on (R12(s, t), s^p l11(s, t)^q - 1) from every seed of the
/// grid. Converged seeds are verified against the matrix relation; parabolic
/// ones are judged by the matrix residual alone. Solutions are merged when
/// their (u, tr rho(l)) agree within 10 * tol.
SurgeryResult solve_surgery(SurgerySlope slope, const SolverOptions& options = {});

/// solve_surgery with rows sorted by |u|, then by arg u.
SurgeryResult surgery_table(SurgerySlope slope, const SolverOptions& options = {});

} // namespace fig8
