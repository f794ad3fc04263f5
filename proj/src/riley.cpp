#include "fig8/riley.hpp"

#include <algorithm>
#include <cmath>

#include "fig8/errors.hpp"

namespace fig8 {

namespace {

constexpr double kSingularS = 1e-12;

void require_nonzero(Cx s) {
    if (!(std::abs(s) > kSingularS) || !is_finite(s)) throw SingularParameter("s must be a nonzero finite number");
}

} // namespace

const char* branch_symbol(Branch b) noexcept { return b == Branch::plus ? "+" : "-"; }

RileyPoint make_point(Cx s, Cx t, Branch branch) {
    require_nonzero(s);
    if (!is_finite(t)) throw SingularParameter("t must be finite");
    return {s, t, branch, std::abs(riley_poly(s, t)), false};
}

double variety_scale(Cx s, Cx t) noexcept {
    const double s2 = std::norm(s);
    return std::max({1.0, s2, s2 > 0.0 ? 1.0 / s2 : 1.0, std::norm(t)});
}

bool on_variety(const RileyPoint& p, double tol) noexcept {
    return p.residual <= tol * variety_scale(p.s, p.t);
}

bool is_reducible(const RileyPoint& p, double tol) noexcept {
    return std::abs(p.t) <= tol * std::max(1.0, std::abs(p.s));
}

GeneratorImages rep_matrices(Cx s, Cx t) {
    require_nonzero(s);
    const Cx si = 1.0 / s;
    return {Mat2{s, 1.0, 0.0, si}, Mat2{s, 0.0, -t, si}};
}

GeneratorImages rep_matrices(const RileyPoint& p) { return rep_matrices(p.s, p.t); }

Cx riley_poly(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s2 = s * s;
    return 3.0 - 1.0 / s2 - s2 + 3.0 * t - t / s2 - s2 * t + t * t;
}

Cx riley_poly_21(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s2 = s * s;
    const Cx t2 = t * t;
    return 3.0 * t - t / s2 - s2 * t + 3.0 * t2 - t2 / s2 - s2 * t2 + t2 * t;
}

Cx riley_poly_ds(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s3 = s * s * s;
    return 2.0 / s3 - 2.0 * s + 2.0 * t / s3 - 2.0 * s * t;
}

Cx riley_poly_dt(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s2 = s * s;
    return 3.0 - 1.0 / s2 - s2 + 2.0 * t;
}

BranchPair solve_t(Cx s) {
    require_nonzero(s);
    // s^2 R12 = s^2 t^2 + (3s^2 - 1 - s^4) t + (3s^2 - 1 - s^4); its
    // discriminant is 1 - 2s^2 - s^4 - 2s^6 + s^8.
    const Cx s2 = s * s;
    const Cx k = 3.0 * s2 - 1.0 - s2 * s2;
    const auto roots = solve_quadratic(s2, k, k);
    BranchPair out{make_point(s, roots.plus, Branch::plus), make_point(s, roots.minus, Branch::minus),
                   roots.coincident};
    out.plus.double_root = out.minus.double_root = roots.coincident;
    return out;
}

GroupWord w_word() { return GroupWord::parse("xYXy"); }
GroupWord w_tilde_word() { return GroupWord::parse("XyxY"); }
GroupWord relator_word() {
    return w_word() * GroupWord::parse("x") * w_word().inverse() * GroupWord::parse("Y");
}
GroupWord longitude_word() { return w_word().inverse() * w_tilde_word(); }

Cx longitude_l11(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s2 = s * s, s4 = s2 * s2, t2 = t * t, t3 = t2 * t;
    return 1.0 - t / s2 + s2 * t - t2 + t2 / s4 - t2 / s2 + s2 * t2 - t3 - t3 / s2;
}

Cx longitude_l11_ds(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s3 = s * s * s, s5 = s3 * s * s, t2 = t * t, t3 = t2 * t;
    return 2.0 * t / s3 + 2.0 * s * t - 4.0 * t2 / s5 + 2.0 * t2 / s3 + 2.0 * s * t2 + 2.0 * t3 / s3;
}

Cx longitude_l11_dt(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s2 = s * s, s4 = s2 * s2, t2 = t * t;
    return -1.0 / s2 + s2 - 2.0 * t + 2.0 * t / s4 - 2.0 * t / s2 + 2.0 * s2 * t - 3.0 * t2 - 3.0 * t2 / s2;
}

Mat2 longitude_matrix_closed(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s2 = s * s, s3 = s2 * s, s4 = s2 * s2;
    const Cx t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
    Mat2 l;
    l.a11 = longitude_l11(s, t);
    l.a12 = t / s3 + s3 * t - t2 / s - s * t2;
    l.a21 = t2 / s3 - 2.0 * t2 / s - 2.0 * s * t2 + s3 * t2 + t3 / s3 - 2.0 * t3 / s - 2.0 * s * t3 + s3 * t3 -
            t4 / s - s * t4;
    l.a22 = 1.0 + t / s2 - s2 * t - t2 + t2 / s2 - s2 * t2 + s4 * t2 - t3 - s2 * t3;
    return l;
}

Mat2 longitude_matrix_closed(const RileyPoint& p) { return longitude_matrix_closed(p.s, p.t); }

Cx longitude_trace(Cx s, Cx t) {
    require_nonzero(s);
    const Cx s2 = s * s, s4 = s2 * s2, t2 = t * t, t3 = t2 * t;
    return 2.0 - 2.0 * t2 + t2 / s4 + s4 * t2 - 2.0 * t3 - t3 / s2 - s2 * t3;
}

TraceU trace_u(Cx s) {
    require_nonzero(s);
    return TraceU{s + 1.0 / s};
}

bool is_peripherally_acyclic(const RileyPoint& p, double tol) {
    const auto images = rep_matrices(p);
    const Mat2 l = evaluate_word(longitude_word(), images);
    const Cx traces[] = {images.x.trace(), l.trace(), (images.x * l).trace()};
    return std::any_of(std::begin(traces), std::end(traces), [&](Cx tr) { return std::abs(tr - 2.0) > tol; });
}

} // namespace fig8
