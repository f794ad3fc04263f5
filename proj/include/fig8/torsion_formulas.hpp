#pragma once

#include <optional>
#include <string>

#include "fig8/chain_torsion.hpp"
#include "fig8/config.hpp"
#include "fig8/riley.hpp"

namespace fig8 {

// Closed forms in u = tr rho(x).

/// tau(E(K)) = -2(u - 1).
Cx torsion_exterior_closed(TraceU u);

/// tau(N) = -1 / (u^2 (u^2 - 5)). Throws DegenerateU when
/// |u^2 (u^2 - 5)| <= tol.degenerate.
Cx torsion_solid_torus_closed(TraceU u, const Tolerances& tol = {});

/// tau(M) = 2(u - 1) / (u^2 (u^2 - 5)). Throws DegenerateU as above.
Cx torsion_surgered(TraceU u, const Tolerances& tol = {});

// Twisted chain complexes. Fox-calculus boundary maps are naturally written
// for row vectors acting on the right; the matrices here are their
// transposes, which leaves every determinant in the torsion unchanged.

/// 0 -> C_2 -> C_1 -> C_0 -> 0 for a two-generator one-relator presentation:
/// d_2 = (Phi(dr/dx), Phi(dr/dy)), d_1 = (Phi(x - 1), Phi(y - 1)).
ChainComplex presentation_complex(const GroupWord& relator, const GeneratorImages& images,
                                  const Tolerances& tol = {});

/// Presentation complex of the knot group at p (relator w x w^-1 y^-1).
ChainComplex exterior_complex(const RileyPoint& p, const Tolerances& tol = {});

/// 0 -> C_1 --Phi(g - 1)--> C_0 -> 0 for a circle whose generator maps to g.
ChainComplex circle_complex(const Mat2& g);

/// Presentation complex of <x, y | x y x^-1 y^-1> with the given commuting images.
ChainComplex torus_complex(const GeneratorImages& commuting, const Tolerances& tol = {});

struct ExteriorOracle {
    TorsionValue chain;        // torsion of exterior_complex, sign_ambiguous set
    std::optional<Cx> ratio;   // det Phi(dr/dy) / det Phi(x - 1), absent when 2 - u ~ 0
};

/// Exterior torsion from the presentation complex, plus the determinant
/// ratio when det(rho(x) - E) = 2 - u is not negligible. The chain-complex
/// value is authoritative; it is also defined at u = 2. Throws NotAcyclic
/// when the complex is not acyclic or its torsion is below tol.acyclic
/// (for instance u = 1).
ExteriorOracle exterior_oracle_forms(const RileyPoint& p, const Tolerances& tol = {});

TorsionValue torsion_exterior_oracle(const RileyPoint& p, const Tolerances& tol = {});

/// det Phi(dr/dy) / det Phi(x - 1). Throws NotAcyclic when |2 - u| <= tol.acyclic.
Cx exterior_ratio(const RileyPoint& p, const Tolerances& tol = {});

/// 1 / (2 - tr rho(l)) with the closed-form trace. Throws NotAcyclic when
/// |2 - tr rho(l)| <= tol.acyclic.
Cx torsion_solid_torus_from_trace(const RileyPoint& p, const Tolerances& tol = {});

/// Torsion of circle_complex(rho(l)) with rho(l) evaluated from the word.
TorsionValue torsion_solid_torus_oracle(const RileyPoint& p, const Tolerances& tol = {});

/// Torsion of the twisted torus complex; its magnitude is 1 whenever the
/// complex is acyclic. sign_ambiguous is set.
TorsionValue torsion_torus_oracle(const GeneratorImages& commuting, const Tolerances& tol = {});

enum class EntryStatus { ok, not_acyclic, degenerate, skipped };
const char* status_name(EntryStatus s) noexcept;

struct TorsionEntry {
    EntryStatus status = EntryStatus::skipped;
    Cx value{0.0};
    bool sign_ambiguous = false;
    std::string note;

    bool ok() const noexcept { return status == EntryStatus::ok; }
};

enum class CheckResult { pass, fail, skipped };
const char* check_name(CheckResult c) noexcept;

struct ConsistencyFlags {
    CheckResult exterior_oracle_vs_closed = CheckResult::skipped;  // |oracle| = |-2(u-1)|
    CheckResult oracle_ratio_vs_chain = CheckResult::skipped;      // the two oracle forms, up to sign
    CheckResult solid_trace_vs_closed = CheckResult::skipped;      // 1/(2 - tr) = -1/(u^2(u^2-5))
    CheckResult solid_trace_vs_circle = CheckResult::skipped;      // trace form = circle complex
    CheckResult product_vs_theorem = CheckResult::skipped;         // closed product = theorem value
    CheckResult oracle_product_vs_theorem = CheckResult::skipped;  // |oracle * trace form| = |theorem|

    /// No check failed (skipped checks are allowed).
    bool all_pass() const noexcept;
};

struct TorsionReport {
    RileyPoint point;
    Cx u{0.0};
    Cx trace_longitude{0.0};
    bool on_variety = false;
    bool reducible = false;
    bool peripherally_acyclic = false;
    bool exterior_acyclic = false;
    bool degenerate = false;  // u^2 (u^2 - 5) ~ 0

    TorsionEntry tau_exterior_closed;
    TorsionEntry tau_exterior_oracle;
    TorsionEntry tau_exterior_ratio;
    TorsionEntry tau_solid_closed;
    TorsionEntry tau_solid_trace;
    TorsionEntry tau_solid_circle;
    TorsionEntry tau_surgered;

    /// Torsion of the surgered manifold as reported: the theorem value, 0 for
    /// a non-acyclic representation, absent (status degenerate) when the
    /// formula's denominator vanishes.
    TorsionEntry tau_manifold;

    ConsistencyFlags flags;
};

/// Every torsion quantity at p with cross-checks. Entries that cannot be
/// evaluated carry a status instead of failing the report. Reducible points
/// are reported as non-acyclic with tau(M) = 0. Throws OffVariety for an
/// irreducible point that does not satisfy R12 = 0.
TorsionReport full_report(const RileyPoint& p, const Tolerances& tol = {});

} // namespace fig8
