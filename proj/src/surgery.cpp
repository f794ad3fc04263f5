#include "fig8/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

#include "fig8/errors.hpp"
#include "fig8/torsion_formulas.hpp"

namespace fig8 {

SurgerySlope make_slope(int p, int q) {
    if (std::gcd(p, q) != 1)
        throw InvalidSlope("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not coprime");
    return {p, q};
}

std::vector<std::string> solution_flags(const SurgerySolution& s) {
    std::vector<std::string> flags;
    if (s.parabolic) flags.emplace_back("parabolic");
    if (s.degenerate) flags.emplace_back("degenerate");
    if (s.reducible) flags.emplace_back("reducible");
    return flags;
}

Cx aligned_longitude_eigenvalue(const RileyPoint& p, double tol) {
    const Mat2 l = longitude_matrix_closed(p);
    if (std::abs(l.a21) > tol * std::max(1.0, max_abs(l)))
        throw OffVariety("rho(l) is not upper triangular: |l21| = " + std::to_string(std::abs(l.a21)));
    return l.a11;
}

namespace {

Cx ipow(Cx z, int n) {
    Cx r{1.0};
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

// s^a lambda^b and its partials given lambda's partials.
struct Monomial {
    Cx value, ds, dt;
};

Monomial monomial(Cx s, Cx lambda, Cx lambda_ds, Cx lambda_dt, int a, int b) {
    const Cx sa = ipow(s, a), lb = ipow(lambda, b);
    const Cx sa_ds = a > 0 ? static_cast<double>(a) * ipow(s, a - 1) : Cx{0.0};
    const Cx lb_dl = b > 0 ? static_cast<double>(b) * ipow(lambda, b - 1) : Cx{0.0};
    return {sa * lb, sa_ds * lb + sa * lb_dl * lambda_ds, sa * lb_dl * lambda_dt};
}

// The relation s^p lambda^q = 1 written without negative powers:
// s^(p+) lambda^(q+) - s^(p-) lambda^(q-) = 0.
struct RelationEq {
    int p_pos, p_neg, q_pos, q_neg;

    explicit RelationEq(SurgerySlope slope)
        : p_pos(std::max(slope.p, 0)), p_neg(std::max(-slope.p, 0)), q_pos(std::max(slope.q, 0)),
          q_neg(std::max(-slope.q, 0)) {}

    Monomial eval(Cx s, Cx t) const {
        const Cx l = longitude_l11(s, t), l_s = longitude_l11_ds(s, t), l_t = longitude_l11_dt(s, t);
        const auto lhs = monomial(s, l, l_s, l_t, p_pos, q_pos);
        const auto rhs = monomial(s, l, l_s, l_t, p_neg, q_neg);
        return {lhs.value - rhs.value, lhs.ds - rhs.ds, lhs.dt - rhs.dt};
    }
};

struct NewtonState {
    Cx s, t;
    double residual;
};

double system_residual(const RelationEq& eq, Cx s, Cx t) {
    const double r = std::max(std::abs(riley_poly(s, t)), std::abs(eq.eval(s, t).value));
    return std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
}

bool in_domain(Cx s, Cx t) {
    const double a = std::abs(s);
    return is_finite(s) && is_finite(t) && a > 1e-4 && a < 1e4 && std::abs(t) < 1e8;
}

// Damped Newton; returns the final state or throws NoConvergence.
NewtonState newton(const RelationEq& eq, Cx s, Cx t, int max_iterations) {
    double res = system_residual(eq, s, t);
    int stalled = 0;
    for (int it = 0; it < max_iterations; ++it) {
        const double scale = variety_scale(s, t);
        if (res <= 1e-15 * scale) break;
        const Cx f1 = riley_poly(s, t);
        const auto g = eq.eval(s, t);
        const Cx j11 = riley_poly_ds(s, t), j12 = riley_poly_dt(s, t);
        const Cx det = j11 * g.dt - j12 * g.ds;
        if (!(std::abs(det) > 1e-300) || !is_finite(det)) throw NoConvergence("singular Jacobian");
        const Cx ds = (f1 * g.dt - j12 * g.value) / det;
        const Cx dt = (j11 * g.value - f1 * g.ds) / det;

        double step = 1.0;
        Cx s_next = s - ds, t_next = t - dt;
        double res_next = in_domain(s_next, t_next) ? system_residual(eq, s_next, t_next)
                                                    : std::numeric_limits<double>::infinity();
        for (int halvings = 0; res_next > res && halvings < 30; ++halvings) {
            step *= 0.5;
            s_next = s - step * ds;
            t_next = t - step * dt;
            res_next = in_domain(s_next, t_next) ? system_residual(eq, s_next, t_next)
                                                 : std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(res_next)) throw NoConvergence("iterate left the domain");
        const double move = std::abs(s_next - s) + std::abs(t_next - t);
        s = s_next;
        t = t_next;
        if (res_next >= res) {
            if (++stalled >= 3) break;
        } else {
            stalled = 0;
        }
        res = res_next;
        if (move <= 1e-16 * (1.0 + std::abs(s) + std::abs(t))) break;
    }
    return {s, t, res};
}

bool same_character(const SurgerySolution& a, const SurgerySolution& b, double tol) {
    return rel_diff(a.u, b.u) <= tol && rel_diff(a.trace_longitude, b.trace_longitude) <= tol;
}

} // namespace

RelationResidual surgery_residual(const RileyPoint& p, SurgerySlope slope) {
    const auto images = rep_matrices(p);
    const Mat2 l = evaluate_word(longitude_word(), images);
    const Mat2 rel = mat2_pow(images.x, slope.p) * mat2_pow(l, slope.q);
    const Cx lambda = longitude_l11(p.s, p.t);
    const Cx scalar = std::pow(p.s, slope.p) * std::pow(lambda, slope.q) - 1.0;
    return {scalar, norm(rel - Mat2::identity())};
}

SurgeryResult solve_surgery(SurgerySlope slope, const SolverOptions& options) {
    slope = make_slope(slope.p, slope.q);
    const RelationEq eq(slope);
    SurgeryResult result;
    result.slope = slope;

    std::vector<SurgerySolution> found;
    std::size_t index = 0;
    for (double radius : options.grid.radii) {
        for (int k = 0; k < options.grid.angles; ++k) {
            const double angle = 2.0 * std::numbers::pi * (k + 0.5) / options.grid.angles;
            const Cx s0 = std::polar(radius, angle);
            const auto branches = solve_t(s0);
            for (const auto& seed : {branches.plus, branches.minus}) {
                const std::size_t seed_index = index++;
                auto fail = [&](std::string reason) {
                    result.failures.push_back({seed_index, s0, seed.branch, std::move(reason)});
                };
                NewtonState st;
                try {
                    st = newton(eq, seed.s, seed.t, options.max_iterations);
                } catch (const NoConvergence& e) {
                    fail(e.what());
                    continue;
                } catch (const SingularParameter& e) {
                    fail(e.what());
                    continue;
                }

                SurgerySolution sol;
                sol.point = make_point(st.s, st.t, seed.branch);
                sol.variety_residual = sol.point.residual;
                if (!(sol.variety_residual <= options.tol)) {
                    fail("NoConvergence: |R12| = " + std::to_string(sol.variety_residual));
                    continue;
                }
                const auto rel = surgery_residual(sol.point, slope);
                sol.relation_residual = rel.matrix;
                sol.scalar_residual = std::abs(rel.scalar);
                sol.parabolic = std::abs(st.s * st.s - 1.0) <= options.parabolic_tol;
                if (!(sol.relation_residual <= options.tol)) {
                    fail(std::string(sol.parabolic ? "parabolic seed rejected" : "rejected") +
                         ": ||rho(x)^p rho(l)^q - E|| = " + std::to_string(sol.relation_residual));
                    continue;
                }
                sol.u = trace_u(st.s).value;
                sol.trace_longitude = longitude_trace(sol.point);
                sol.lambda = longitude_l11(st.s, st.t);
                sol.reducible = is_reducible(sol.point);
                sol.degenerate = std::abs(sol.u * sol.u - 5.0) <= options.degenerate_tol ||
                                 std::abs(sol.u) <= options.degenerate_tol;
                if (!sol.degenerate) {
                    try {
                        sol.torsion = torsion_surgered(TraceU{sol.u});
                    } catch (const DegenerateU&) {
                        sol.degenerate = true;
                    }
                }
                found.push_back(sol);
            }
        }
    }
    result.seeds = index;

    const double merge_tol = 10.0 * options.tol;
    for (const auto& sol : found) {
        const bool dup = std::any_of(result.solutions.begin(), result.solutions.end(),
                                     [&](const SurgerySolution& kept) { return same_character(kept, sol, merge_tol); });
        if (!dup) result.solutions.push_back(sol);
    }
    return result;
}

SurgeryResult surgery_table(SurgerySlope slope, const SolverOptions& options) {
    auto result = solve_surgery(slope, options);
    auto key_less = [](const SurgerySolution& a, const SurgerySolution& b) {
        const double ma = std::abs(a.u), mb = std::abs(b.u);
        if (std::abs(ma - mb) > 1e-9 * std::max(1.0, std::max(ma, mb))) return ma < mb;
        return std::arg(a.u) < std::arg(b.u);
    };
    std::stable_sort(result.solutions.begin(), result.solutions.end(), key_less);
    return result;
}

} // namespace fig8
