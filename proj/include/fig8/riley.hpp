#pragma once

#include "fig8/config.hpp"
#include "fig8/group_words.hpp"
#include "fig8/numeric.hpp"

namespace fig8 {

enum class Branch { plus, minus };

/// "+" or "-".
const char* branch_symbol(Branch b) noexcept;

/// A parameter pair (s, t) for the Riley normal form
///   x -> [[s, 1], [0, 1/s]],  y -> [[s, 0], [-t, 1/s]].
/// The residual is |R12(s, t)|; points off the variety are representable
/// (the reducible t = 0 points are used as fixtures) but every consumer that
/// needs a homomorphism checks on_variety first.
struct RileyPoint {
    Cx s{1.0};
    Cx t{0.0};
    Branch branch = Branch::plus;
    double residual = 0.0;
    bool double_root = false;  // both t-branches coincide at this s
};

/// Meridian trace u = s + 1/s, kept as its own type so closed forms in u
/// cannot be fed a raw s by mistake.
struct TraceU {
    Cx value;
};

/// Builds a point and fills in its residual. Throws SingularParameter for s = 0.
RileyPoint make_point(Cx s, Cx t, Branch branch = Branch::plus);

/// max(1, |s|^2, |s|^-2, |t|^2), the natural size of the terms of R12.
double variety_scale(Cx s, Cx t) noexcept;

bool on_variety(const RileyPoint& p, double tol = Tolerances{}.variety) noexcept;

/// t = 0 up to tol: both images are triangular and the representation is reducible.
bool is_reducible(const RileyPoint& p, double tol = Tolerances{}.variety) noexcept;

GeneratorImages rep_matrices(const RileyPoint& p);
GeneratorImages rep_matrices(Cx s, Cx t);

/// R12 = 3 - 1/s^2 - s^2 + 3t - t/s^2 - s^2 t + t^2.
Cx riley_poly(Cx s, Cx t);

/// R21 as a polynomial in (s, t); equals t * R12.
Cx riley_poly_21(Cx s, Cx t);

/// Partial derivatives of R12, for Newton iterations.
Cx riley_poly_ds(Cx s, Cx t);
Cx riley_poly_dt(Cx s, Cx t);

struct BranchPair {
    RileyPoint plus;
    RileyPoint minus;
    bool coincident = false;
};

/// Both roots of R12(s, .) = 0:
///   t = (1 - 3s^2 + s^4 +- sqrt(1 - 2s^2 - s^4 - 2s^6 + s^8)) / (2 s^2),
/// the "+" branch taking the principal square root.
BranchPair solve_t(Cx s);

/// w = x y^-1 x^-1 y.
GroupWord w_word();
/// w~ = x^-1 y x y^-1.
GroupWord w_tilde_word();
/// Knot group relator r = w x w^-1 y^-1 (from w x = y w).
GroupWord relator_word();
/// Longitude l = w^-1 w~, reduced: YxyXXyxY.
GroupWord longitude_word();

/// rho(l) from the closed-form entries; valid on the variety.
Mat2 longitude_matrix_closed(const RileyPoint& p);
Mat2 longitude_matrix_closed(Cx s, Cx t);

/// l11 and its partials, used by the surgery Newton system.
Cx longitude_l11(Cx s, Cx t);
Cx longitude_l11_ds(Cx s, Cx t);
Cx longitude_l11_dt(Cx s, Cx t);

/// tr rho(l) = 2 - 2t^2 + t^2/s^4 + s^4 t^2 - 2t^3 - t^3/s^2 - s^2 t^3.
Cx longitude_trace(Cx s, Cx t);
inline Cx longitude_trace(const RileyPoint& p) { return longitude_trace(p.s, p.t); }

TraceU trace_u(Cx s);

/// Restriction to the boundary torus is acyclic: one of tr rho(x),
/// tr rho(l), tr rho(xl) differs from 2 by more than tol.
bool is_peripherally_acyclic(const RileyPoint& p, double tol = Tolerances{}.acyclic);

} // namespace fig8
