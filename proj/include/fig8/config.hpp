#pragma once

namespace fig8 {

// Every threshold used by the library lives here so the CLI can override them
// from flags or a config file. Relative tolerances are scaled by the magnitude
// of the quantities being compared; see the individual call sites.
struct Tolerances {
    double variety = 1e-10;     // |R12| after scaling by max(1, |s|^2, |s|^-2, |t|^2)
    double compare = 1e-8;      // relative agreement between two routes to the same value
    double constraint = 1e-10;  // chain-complex d∘d = 0 check, relative to entry scale
    double degenerate = 1e-8;   // |u^2 (u^2 - 5)| below this raises DegenerateU
    double pivot = 1e-9;        // numerical rank threshold, relative to largest entry
    double acyclic = 1e-8;      // |2 - tr| or |det| below this counts as non-acyclic
    double singular = 1e-12;    // |s| or |det| below this is treated as zero
};

} // namespace fig8
