#include "fig8/torsion_formulas.hpp"

#include <cmath>

#include "fig8/errors.hpp"

namespace fig8 {

namespace {

Cx degenerate_denominator(TraceU u, const Tolerances& tol) {
    const Cx u2 = u.value * u.value;
    const Cx denom = u2 * (u2 - 5.0);
    if (!(std::abs(denom) > tol.degenerate)) throw DegenerateU("u^2 (u^2 - 5) vanishes");
    return denom;
}

// Stacks the transposed 2x2 blocks vertically (rows) or horizontally (cols).
CxMatrix stack_rows(const Mat2& top, const Mat2& bottom) {
    CxMatrix m(4, 2);
    m.topRows(2) = to_matrix(transpose(top));
    m.bottomRows(2) = to_matrix(transpose(bottom));
    return m;
}

CxMatrix stack_cols(const Mat2& left, const Mat2& right) {
    CxMatrix m(2, 4);
    m.leftCols(2) = to_matrix(transpose(left));
    m.rightCols(2) = to_matrix(transpose(right));
    return m;
}

CheckResult compare(Cx a, Cx b, double tol) { return rel_diff(a, b) <= tol ? CheckResult::pass : CheckResult::fail; }

CheckResult compare_abs(Cx a, Cx b, double tol) {
    return rel_diff(std::abs(a), std::abs(b)) <= tol ? CheckResult::pass : CheckResult::fail;
}

TorsionEntry entry_ok(Cx v, bool sign_ambiguous = false) { return {EntryStatus::ok, v, sign_ambiguous, {}}; }

TorsionEntry entry_failed(const Error& e) {
    const auto status = e.code() == ErrorCode::DegenerateU ? EntryStatus::degenerate : EntryStatus::not_acyclic;
    return {status, Cx{0.0}, false, e.what()};
}

} // namespace

Cx torsion_exterior_closed(TraceU u) { return -2.0 * (u.value - 1.0); }

Cx torsion_solid_torus_closed(TraceU u, const Tolerances& tol) { return -1.0 / degenerate_denominator(u, tol); }

Cx torsion_surgered(TraceU u, const Tolerances& tol) {
    return 2.0 * (u.value - 1.0) / degenerate_denominator(u, tol);
}

ChainComplex presentation_complex(const GroupWord& relator, const GeneratorImages& images, const Tolerances& tol) {
    const Mat2 dx = evaluate_group_ring(fox_derivative(relator, Generator::x), images);
    const Mat2 dy = evaluate_group_ring(fox_derivative(relator, Generator::y), images);
    const Mat2 e = Mat2::identity();
    return ChainComplex({2, 4, 2}, {stack_cols(images.x - e, images.y - e), stack_rows(dx, dy)}, tol.constraint);
}

ChainComplex exterior_complex(const RileyPoint& p, const Tolerances& tol) {
    return presentation_complex(relator_word(), rep_matrices(p), tol);
}

ChainComplex circle_complex(const Mat2& g) {
    return ChainComplex({2, 2}, {to_matrix(transpose(g - Mat2::identity()))});
}

ChainComplex torus_complex(const GeneratorImages& commuting, const Tolerances& tol) {
    return presentation_complex(GroupWord::parse("xyXY"), commuting, tol);
}

Cx exterior_ratio(const RileyPoint& p, const Tolerances& tol) {
    const auto images = rep_matrices(p);
    const Cx denom = (images.x - Mat2::identity()).det();
    if (!(std::abs(denom) > tol.acyclic)) throw NotAcyclic("det(rho(x) - E) = 2 - u vanishes");
    const Mat2 dy = evaluate_group_ring(fox_derivative(relator_word(), Generator::y), images);
    return checked(dy.det() / denom, "exterior ratio");
}

ExteriorOracle exterior_oracle_forms(const RileyPoint& p, const Tolerances& tol) {
    ExteriorOracle out;
    out.chain = torsion(exterior_complex(p, tol), tol.pivot);
    out.chain.sign_ambiguous = true;
    // A rank drop hidden by the error in t (double roots at u^2 = 1) shows up
    // as a vanishing determinant.
    if (!(std::abs(out.chain.value) > tol.acyclic))
        throw NotAcyclic("exterior torsion vanishes; twisted homology is nonzero");
    try {
        out.ratio = exterior_ratio(p, tol);
    } catch (const NotAcyclic&) {
        out.ratio.reset();
    }
    return out;
}

TorsionValue torsion_exterior_oracle(const RileyPoint& p, const Tolerances& tol) {
    return exterior_oracle_forms(p, tol).chain;
}

Cx torsion_solid_torus_from_trace(const RileyPoint& p, const Tolerances& tol) {
    const Cx gap = 2.0 - longitude_trace(p);
    if (!(std::abs(gap) > tol.acyclic)) throw NotAcyclic("tr rho(l) = 2");
    return 1.0 / gap;
}

TorsionValue torsion_solid_torus_oracle(const RileyPoint& p, const Tolerances& tol) {
    const Mat2 l = evaluate_word(longitude_word(), rep_matrices(p));
    return torsion(circle_complex(l), tol.pivot);
}

TorsionValue torsion_torus_oracle(const GeneratorImages& commuting, const Tolerances& tol) {
    auto value = torsion(torus_complex(commuting, tol), tol.pivot);
    value.sign_ambiguous = true;
    return value;
}

const char* status_name(EntryStatus s) noexcept {
    switch (s) {
    case EntryStatus::ok: return "ok";
    case EntryStatus::not_acyclic: return "not_acyclic";
    case EntryStatus::degenerate: return "degenerate";
    case EntryStatus::skipped: return "skipped";
    }
    return "unknown";
}

const char* check_name(CheckResult c) noexcept {
    switch (c) {
    case CheckResult::pass: return "pass";
    case CheckResult::fail: return "fail";
    case CheckResult::skipped: return "skipped";
    }
    return "unknown";
}

bool ConsistencyFlags::all_pass() const noexcept {
    for (auto c : {exterior_oracle_vs_closed, oracle_ratio_vs_chain, solid_trace_vs_closed, solid_trace_vs_circle,
                   product_vs_theorem, oracle_product_vs_theorem})
        if (c == CheckResult::fail) return false;
    return true;
}

TorsionReport full_report(const RileyPoint& p, const Tolerances& tol) {
    TorsionReport r;
    r.point = p;
    r.on_variety = on_variety(p, tol.variety);
    r.reducible = is_reducible(p, tol.variety);
    const TraceU u = trace_u(p.s);
    r.u = u.value;
    r.trace_longitude = longitude_trace(p);
    r.peripherally_acyclic = is_peripherally_acyclic(p, tol.acyclic);
    const Cx u2 = u.value * u.value;
    r.degenerate = !(std::abs(u2 * (u2 - 5.0)) > tol.degenerate);

    if (r.reducible) {
        // Reducible representations are never fed to the formulas.
        const TorsionEntry marked{EntryStatus::not_acyclic, Cx{0.0}, false, "reducible representation (t = 0)"};
        r.tau_exterior_closed = r.tau_exterior_oracle = r.tau_exterior_ratio = marked;
        r.tau_solid_closed = r.tau_solid_trace = r.tau_solid_circle = r.tau_surgered = marked;
        r.tau_manifold = marked;
        if (r.degenerate)
            r.tau_manifold = {EntryStatus::degenerate, Cx{0.0}, false, "u^2 (u^2 - 5) = 0: representation degenerates"};
        return r;
    }
    if (!r.on_variety) throw OffVariety("|R12| = " + std::to_string(p.residual) + " exceeds the variety tolerance");

    r.tau_exterior_closed = entry_ok(torsion_exterior_closed(u));

    try {
        const auto forms = exterior_oracle_forms(p, tol);
        r.exterior_acyclic = true;
        r.tau_exterior_oracle = entry_ok(forms.chain.value, true);
        if (forms.ratio)
            r.tau_exterior_ratio = entry_ok(*forms.ratio, true);
        else
            r.tau_exterior_ratio = {EntryStatus::skipped, Cx{0.0}, true, "det(rho(x) - E) = 2 - u vanishes"};
    } catch (const NotAcyclic& e) {
        r.tau_exterior_oracle = entry_failed(e);
        r.tau_exterior_ratio = entry_failed(e);
    }

    try {
        r.tau_solid_closed = entry_ok(torsion_solid_torus_closed(u, tol));
    } catch (const DegenerateU& e) {
        r.tau_solid_closed = entry_failed(e);
    }
    try {
        r.tau_solid_trace = entry_ok(torsion_solid_torus_from_trace(p, tol));
    } catch (const NotAcyclic& e) {
        r.tau_solid_trace = entry_failed(e);
    }
    try {
        r.tau_solid_circle = entry_ok(torsion_solid_torus_oracle(p, tol).value);
    } catch (const NotAcyclic& e) {
        r.tau_solid_circle = entry_failed(e);
    }
    try {
        r.tau_surgered = entry_ok(torsion_surgered(u, tol));
    } catch (const DegenerateU& e) {
        r.tau_surgered = entry_failed(e);
    }

    auto& f = r.flags;
    if (r.tau_exterior_oracle.ok())
        f.exterior_oracle_vs_closed = compare_abs(r.tau_exterior_oracle.value, r.tau_exterior_closed.value, tol.compare);
    if (r.tau_exterior_oracle.ok() && r.tau_exterior_ratio.ok())
        f.oracle_ratio_vs_chain = compare_abs(r.tau_exterior_oracle.value, r.tau_exterior_ratio.value, tol.compare);
    if (r.tau_solid_trace.ok() && r.tau_solid_closed.ok())
        f.solid_trace_vs_closed = compare(r.tau_solid_trace.value, r.tau_solid_closed.value, tol.compare);
    if (r.tau_solid_trace.ok() && r.tau_solid_circle.ok())
        f.solid_trace_vs_circle = compare(r.tau_solid_trace.value, r.tau_solid_circle.value, tol.compare);
    if (r.tau_surgered.ok() && r.tau_solid_closed.ok())
        f.product_vs_theorem =
            compare(r.tau_exterior_closed.value * r.tau_solid_closed.value, r.tau_surgered.value, tol.compare);
    if (r.tau_surgered.ok() && r.tau_exterior_oracle.ok() && r.tau_solid_trace.ok())
        f.oracle_product_vs_theorem =
            compare_abs(r.tau_exterior_oracle.value * r.tau_solid_trace.value, r.tau_surgered.value, tol.compare);

    if (r.degenerate) {
        r.tau_manifold = {EntryStatus::degenerate, Cx{0.0}, false, "u^2 (u^2 - 5) = 0: representation degenerates"};
    } else if (!r.exterior_acyclic || !r.peripherally_acyclic || !r.tau_solid_trace.ok()) {
        r.tau_manifold = {EntryStatus::not_acyclic, Cx{0.0}, false, "non-acyclic: torsion reported as 0"};
    } else {
        r.tau_manifold = r.tau_surgered;
    }
    return r;
}

} // namespace fig8
