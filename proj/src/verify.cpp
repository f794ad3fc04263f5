#include "fig8/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <ostream>

#include "fig8/errors.hpp"
#include "fig8/fixtures.hpp"
#include "fig8/torsion_formulas.hpp"

namespace fig8 {

namespace {

using fixtures::Rng;

// Accumulates the worst residual of one check.
class Tally {
public:
    Tally(std::string name, double threshold) { out_.name = std::move(name), out_.threshold = threshold; }

    void observe(double residual) {
        ++out_.cases;
        if (!(residual <= out_.threshold)) out_.passed = false;  // NaN fails too
        if (std::isnan(residual) || residual > out_.max_residual) out_.max_residual = residual;
    }
    void fail() {
        ++out_.cases;
        out_.passed = false;
    }
    CheckOutcome done() const { return out_; }

private:
    CheckOutcome out_;
};

std::vector<RileyPoint> sample_points(Rng& rng, std::size_t samples) {
    std::vector<RileyPoint> pts;
    pts.reserve(2 * samples);
    while (pts.size() < 2 * samples) {
        const Cx s = fixtures::log_uniform_s(rng);
        const auto u = trace_u(s).value;
        if (std::abs(2.0 - u) < 1e-3 || std::abs(u * u * (u * u - 5.0)) < 1e-3) continue;
        const auto b = solve_t(s);
        pts.push_back(b.plus);
        pts.push_back(b.minus);
    }
    return pts;
}

CheckOutcome geometric_point_chain(const Tolerances& tol) {
    Tally t("fixture.geometric_point", 1e-10);
    const auto pt = solve_t(Cx{1.0}).plus;
    const Cx omega{-0.5, std::sqrt(3.0) / 2.0};
    const auto u = trace_u(pt.s);
    t.observe(std::abs(pt.t - omega));
    t.observe(pt.residual <= 1e-12 ? 0.0 : 1.0);
    t.observe(std::abs(longitude_trace(pt) + 2.0));
    t.observe(std::abs(torsion_exterior_closed(u) + 2.0));
    t.observe(std::abs(torsion_solid_torus_from_trace(pt, tol) - 0.25));
    t.observe(std::abs(torsion_solid_torus_closed(u, tol) - 0.25));
    t.observe(std::abs(torsion_surgered(u, tol) + 0.5));
    const auto report = full_report(pt, tol);
    t.observe(report.flags.all_pass() && report.tau_manifold.ok() ? std::abs(report.tau_manifold.value + 0.5) : 1.0);
    return t.done();
}

CheckOutcome chain_fixtures_with(const Tolerances& tol) {
    Tally t("chain.fixed_complexes", 1e-12);
    CxMatrix two(1, 1);
    two << 2.0;
    t.observe(std::abs(torsion(ChainComplex({1, 1}, {two}), tol.pivot).value - 0.5));
    t.observe(std::abs(torsion(ChainComplex({2, 2}, {CxMatrix::Identity(2, 2)}), tol.pivot).value - 1.0));
    CxMatrix d1(1, 2), d2(2, 1);
    d1 << 0.0, 3.0;
    d2 << 1.0, 0.0;
    t.observe(std::abs(torsion(ChainComplex({1, 2, 1}, {d1, d2}), tol.pivot).value - 1.0 / 3.0));
    return t.done();
}

} // namespace

std::vector<CheckOutcome> run_verification(const VerifyOptions& options) {
    const auto& tol = options.tol;
    Rng rng(options.seed);
    std::vector<CheckOutcome> out;

    for (auto* check : {&geometric_point_chain, &chain_fixtures_with}) {
        try {
            out.push_back(check(tol));
        } catch (const Error&) {
            out.push_back({check == &geometric_point_chain ? "fixture.geometric_point" : "chain.fixed_complexes",
                           false, 0.0, 0.0, 1});
        }
    }

    const std::size_t n = options.samples;
    const auto points = sample_points(rng, n);

    {
        Tally det_mul("numeric.det_multiplicative", 1e-10), inverse("numeric.inverse", 1e-10),
            quad("numeric.quadratic_residual", 1e-10);
        for (std::size_t k = 0; k < n; ++k) {
            const Mat2 a = fixtures::random_unimodular(rng), b = fixtures::random_unimodular(rng);
            det_mul.observe(std::abs((a * b).det() - a.det() * b.det()) / std::max(1.0, max_abs(a) * max_abs(b)));
            const Mat2 ai = mat2_inverse(a);
            inverse.observe(std::max(norm(a * ai - Mat2::identity()), norm(ai * a - Mat2::identity())) /
                            std::max(1.0, max_abs(a) * max_abs(ai)));
            Cx qa = fixtures::gaussian(rng);
            if (std::abs(qa) < 1e-3) qa = 1e-3;
            const Cx qb = fixtures::gaussian(rng), qc = fixtures::gaussian(rng);
            const auto r = solve_quadratic(qa, qb, qc);
            const double scale = std::max({1.0, std::abs(qa), std::abs(qb), std::abs(qc)});
            for (Cx root : {r.plus, r.minus}) quad.observe(std::abs(qa * root * root + qb * root + qc) / scale);
        }
        out.push_back(det_mul.done());
        out.push_back(inverse.done());
        out.push_back(quad.done());
    }

    {
        Tally indep("chain.basis_independence", 1e-8), normal("chain.normal_form_torsion", 1e-8);
        const std::size_t complexes = n == 0 ? 0 : 20;
        for (std::size_t k = 0; k < complexes; ++k) {
            const auto fx = fixtures::random_acyclic_complex(rng);
            const Cx tau = torsion(fx.complex).value;
            normal.observe(rel_diff(tau, fx.expected));
            for (std::uint64_t seed = 0; seed < 10; ++seed)
                indep.observe(rel_diff(torsion_with_basis_perturbation(fx.complex, seed).value, tau));
        }
        out.push_back(indep.done());
        out.push_back(normal.done());
    }

    {
        Tally torus("torus.oracle_unit_magnitude", 1e-8);
        const std::size_t cases = std::min<std::size_t>(n, 100);
        for (std::size_t k = 0; k < cases; ++k) {
            try {
                torus.observe(std::abs(std::abs(torsion_torus_oracle(fixtures::random_commuting_pair(rng), tol).value) - 1.0));
            } catch (const Error&) {
                torus.fail();
            }
        }
        out.push_back(torus.done());
    }

    {
        Tally fox("words.fox_fundamental_identity", 1e-9), hom("words.homomorphism", 1e-9);
        const std::size_t cases = std::min<std::size_t>(n, 100);
        for (std::size_t k = 0; k < cases; ++k) {
            const GeneratorImages img{fixtures::random_unimodular(rng), fixtures::random_unimodular(rng)};
            const GroupWord r = fixtures::random_word(rng, 8);
            const Mat2 lhs = evaluate_group_ring(fox_derivative(r, Generator::x), img) * (img.x - Mat2::identity()) +
                             evaluate_group_ring(fox_derivative(r, Generator::y), img) * (img.y - Mat2::identity());
            const Mat2 rhs = evaluate_word(r, img) - Mat2::identity();
            fox.observe(norm(lhs - rhs) / std::max(1.0, norm(rhs)));
            const GroupWord a = fixtures::random_word(rng, 6), b = fixtures::random_word(rng, 6);
            const Mat2 ab = evaluate_word(a * b, img);
            hom.observe(norm(ab - evaluate_word(a, img) * evaluate_word(b, img)) / std::max(1.0, norm(ab)));
        }
        out.push_back(fox.done());
        out.push_back(hom.done());
    }

    {
        Tally variety("variety.on_variety", 1.0), relation("variety.knot_relation", 1e-9),
            lemma("variety.longitude_lemma", 1e-9), l21("variety.peripheral_commutation", 1e-8),
            trace("variety.trace_identity", 1e-8);
        for (const auto& p : points) {
            variety.observe(p.residual / (tol.variety * variety_scale(p.s, p.t)));
            const auto img = rep_matrices(p);
            const Mat2 w = evaluate_word(w_word(), img);
            relation.observe(norm(w * img.x - img.y * w) / std::max(1.0, norm(w * img.x)));
            const Mat2 word_l = evaluate_word(longitude_word(), img);
            const Mat2 closed_l = longitude_matrix_closed(p);
            lemma.observe(max_abs(word_l - closed_l) / std::max(1.0, max_abs(word_l)));
            l21.observe(std::abs(closed_l.a21));
            const Cx u = trace_u(p.s).value;
            const Cx u2 = u * u;
            trace.observe(rel_diff(2.0 - longitude_trace(p), -u2 * u2 + 5.0 * u2));
        }
        out.push_back(variety.done());
        out.push_back(relation.done());
        out.push_back(lemma.done());
        out.push_back(l21.done());
        out.push_back(trace.done());
    }

    {
        Tally ext("exterior.oracle_vs_closed", 1e-8), forms("exterior.ratio_vs_chain", 1e-8),
            solid("solid.trace_vs_closed", 1e-8), circle("solid.circle_vs_trace", 1e-8);
        for (const auto& p : points) {
            const auto u = trace_u(p.s);
            try {
                const auto o = exterior_oracle_forms(p, tol);
                ext.observe(rel_diff(std::abs(o.chain.value), std::abs(torsion_exterior_closed(u))));
                if (o.ratio) forms.observe(rel_diff(std::abs(o.chain.value), std::abs(*o.ratio)));
                const Cx from_trace = torsion_solid_torus_from_trace(p, tol);
                solid.observe(rel_diff(from_trace, torsion_solid_torus_closed(u, tol)));
                circle.observe(rel_diff(torsion_solid_torus_oracle(p, tol).value, from_trace));
            } catch (const Error&) {
                ext.fail();
            }
        }
        out.push_back(ext.done());
        out.push_back(forms.done());
        out.push_back(solid.done());
        out.push_back(circle.done());
    }

    {
        Tally product("theorem.product_identity", 1e-12);
        std::uniform_real_distribution<double> box(-3.0, 3.0);
        const std::size_t cases = n == 0 ? 0 : 1000;
        for (std::size_t k = 0; k < cases; ++k) {
            const TraceU u{Cx{box(rng), box(rng)}};
            const Cx u2 = u.value * u.value;
            if (std::abs(u2 * (u2 - 5.0)) < 1e-3) continue;
            try {
                product.observe(
                    rel_diff(torsion_surgered(u, tol), torsion_exterior_closed(u) * torsion_solid_torus_closed(u, tol)));
            } catch (const Error&) {
                product.fail();
            }
        }
        out.push_back(product.done());
    }

    {
        Tally empty("surgery.slope_1_0_empty", 0.0);
        empty.observe(static_cast<double>(solve_surgery(make_slope(1, 0), options.solver).solutions.size()));
        out.push_back(empty.done());

        Tally rel("surgery.relation_residual", options.solver.tol), var("surgery.variety_residual", options.solver.tol),
            tau("surgery.torsion_matches_theorem", 1e-8), oracle("surgery.torsion_matches_oracles", 1e-8),
            degen("surgery.degenerate_flagged", 0.0);
        for (int p = -options.max_slope; p <= options.max_slope; ++p) {
            for (int q = -options.max_slope; q <= options.max_slope; ++q) {
                if (std::gcd(p, q) != 1) continue;
                const auto result = solve_surgery(make_slope(p, q), options.solver);
                for (const auto& s : result.solutions) {
                    rel.observe(s.relation_residual);
                    var.observe(std::abs(riley_poly(s.point.s, s.point.t)));
                    const Cx u2 = s.u * s.u;
                    const bool near5 = std::abs(u2 - 5.0) <= 1e-6;
                    degen.observe(near5 && !s.degenerate ? 1.0 : 0.0);
                    if (s.degenerate) continue;
                    if (!s.torsion) {
                        tau.fail();
                        continue;
                    }
                    const Cx expected = 2.0 * (s.u - 1.0) / (u2 * (u2 - 5.0));
                    tau.observe(std::abs(*s.torsion - expected) / std::max(1.0, std::abs(*s.torsion)));
                    // Fox-calculus exterior times circle complex, up to sign
                    try {
                        const Cx product = torsion_exterior_oracle(s.point, tol).value *
                                           torsion_solid_torus_oracle(s.point, tol).value;
                        oracle.observe(rel_diff(std::abs(product), std::abs(*s.torsion)));
                    } catch (const NotAcyclic&) {
                    }
                }
            }
        }
        out.push_back(rel.done());
        out.push_back(var.done());
        out.push_back(tau.done());
        out.push_back(oracle.done());
        out.push_back(degen.done());
    }

    return out;
}

void print_verification(std::ostream& os, const std::vector<CheckOutcome>& outcomes) {
    std::size_t passed = 0;
    for (const auto& c : outcomes) {
        char line[160];
        std::snprintf(line, sizeof line, "%s  %-34s max=%.3e  tol=%.1e  n=%zu\n", c.passed ? "PASS" : "FAIL",
                      c.name.c_str(), c.max_residual, c.threshold, c.cases);
        os << line;
        if (c.passed) ++passed;
    }
    os << "verify: " << passed << "/" << outcomes.size() << " checks passed\n";
}

bool all_passed(const std::vector<CheckOutcome>& outcomes) noexcept {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& c) { return c.passed; });
}

} // namespace fig8
