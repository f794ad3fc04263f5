#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fig8/errors.hpp"
#include "fig8/fixtures.hpp"
#include "fig8/io.hpp"
#include "fig8/riley.hpp"
#include "fig8/surgery.hpp"
#include "fig8/torsion_formulas.hpp"

using namespace fig8;
using fixtures::Rng;

namespace {

std::vector<Cx> sorted_us(const SurgeryResult& r) {
    std::vector<Cx> us;
    for (const auto& s : r.solutions) us.push_back(s.u);
    std::sort(us.begin(), us.end(), [](Cx a, Cx b) {
        if (std::abs(a.real() - b.real()) > 1e-7) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return us;
}

} // namespace

TEST_CASE("slope validation") {
    CHECK_THROWS_AS(make_slope(6, 4), InvalidSlope);
    CHECK_THROWS_AS(make_slope(0, 0), InvalidSlope);
    CHECK_THROWS_AS(make_slope(0, 2), InvalidSlope);
    CHECK(make_slope(1, 0).p == 1);
    CHECK(make_slope(-1, 0).p == -1);
    CHECK(make_slope(-2, 3).q == 3);
}

TEST_CASE("aligned longitude eigenvalue") {
    const RileyPoint geometric = solve_t(1.0).plus;
    CHECK(std::abs(aligned_longitude_eigenvalue(geometric) + 1.0) < 1e-10);

    Rng rng(61);
    for (int n = 0; n < 100; ++n) {
        const auto pair = solve_t(fixtures::log_uniform_s(rng));
        for (const auto& p : {pair.plus, pair.minus}) {
            const Cx lambda = aligned_longitude_eigenvalue(p);
            const Mat2 l = longitude_matrix_closed(p);
            const double scale = std::max(1.0, max_abs(l));
            CHECK(std::abs(lambda * l.a22 - 1.0) <= 1e-8 * scale * scale);
            CHECK(std::abs(lambda + 1.0 / lambda - longitude_trace(p)) <= 1e-8 * scale);
        }
    }
    CHECK_THROWS_AS(aligned_longitude_eigenvalue(make_point(Cx(1.3, 0.2), 1.0)), OffVariety);
}

TEST_CASE("matrix residual is controlled by the scalar residual") {
    // rho(x)^p rho(l)^q is upper triangular with diagonal (a, 1/a) and
    // commutes with rho(x), so its (1,2) entry is (a - 1/a) / (s - 1/s).
    Rng rng(62);
    std::uniform_int_distribution<int> pq(-3, 3);
    int tried = 0;
    for (int n = 0; n < 200; ++n) {
        const auto pair = solve_t(fixtures::log_uniform_s(rng, 0.5, 2.0));
        const int p = pq(rng), q = pq(rng);
        if (std::gcd(p, q) != 1) continue;
        for (const auto& pt : {pair.plus, pair.minus}) {
            const auto res = surgery_residual(pt, {p, q});
            const Cx a = res.scalar + 1.0;
            const Cx sep = pt.s - 1.0 / pt.s;
            const Cx expected = std::sqrt(std::norm(a - 1.0) + std::norm(1.0 / a - 1.0) + std::norm((a - 1.0 / a) / sep));
            CHECK(std::abs(res.matrix - expected.real()) <= 1e-7 * std::max(1.0, expected.real()));
            ++tried;
        }
    }
    CHECK(tried > 100);
}

TEST_CASE("slope 1/0 has no solutions") {
    const SurgeryResult r = surgery_table(make_slope(1, 0));
    CHECK(r.solutions.empty());
    CHECK(r.seeds == 144);
    CHECK(surgery_table(make_slope(-1, 0)).solutions.empty());
}

TEST_CASE("slope 1/1 solutions satisfy the surgery relation") {
    const SurgeryResult r = surgery_table(make_slope(1, 1));
    REQUIRE_FALSE(r.solutions.empty());
    for (const auto& s : r.solutions) {
        CHECK(s.relation_residual <= 1e-9);
        CHECK(std::abs(riley_poly(s.point.s, s.point.t)) <= 1e-9);
        CHECK(on_variety(s.point));

        const auto im = rep_matrices(s.point);
        const Mat2 rel = im.x * evaluate_word(longitude_word(), im);
        CHECK(norm(rel - Mat2::identity()) <= 1e-9);

        if (s.degenerate) {
            CHECK_FALSE(s.torsion.has_value());
            continue;
        }
        REQUIRE(s.torsion.has_value());
        CHECK(rel_diff(*s.torsion, torsion_surgered(TraceU{s.u})) <= 1e-8);
        const TorsionReport report = full_report(s.point);
        if (report.tau_manifold.ok()) CHECK(rel_diff(*s.torsion, report.tau_manifold.value) <= 1e-8);
    }
}

TEST_CASE("all small slopes") {
    for (int p = -5; p <= 5; ++p)
        for (int q = -5; q <= 5; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const SurgeryResult r = surgery_table(make_slope(p, q));
            for (const auto& s : r.solutions) {
                INFO("slope " << p << "/" << q << " u = " << s.u);
                CHECK(s.relation_residual <= 1e-9);
                CHECK(std::abs(riley_poly(s.point.s, s.point.t)) <= 1e-9);
                const Cx u2 = s.u * s.u;
                if (std::abs(u2 - 5.0) <= 1e-6) CHECK(s.degenerate);
                if (!s.degenerate) {
                    REQUIRE(s.torsion.has_value());
                    CHECK(rel_diff(*s.torsion, torsion_surgered(TraceU{s.u})) <= 1e-8);
                }
            }
        }
}

TEST_CASE("opposite slopes give the same characters") {
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, -2}, {3, 2}}) {
        const auto a = sorted_us(surgery_table(make_slope(p, q)));
        const auto b = sorted_us(surgery_table(make_slope(-p, -q)));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-7);
    }
}

TEST_CASE("solver output is deterministic") {
    const auto slope = make_slope(2, 3);
    const std::string first = io::to_json(surgery_table(slope)).dump();
    const std::string second = io::to_json(surgery_table(slope)).dump();
    CHECK(first == second);
}

TEST_CASE("table order is by |u| then arg u") {
    const SurgeryResult r = surgery_table(make_slope(5, 1));
    REQUIRE(r.solutions.size() > 1);
    for (std::size_t i = 1; i < r.solutions.size(); ++i) {
        const Cx a = r.solutions[i - 1].u, b = r.solutions[i].u;
        CHECK(std::abs(a) <= std::abs(b) * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("slope 0/1 finds only degenerate characters") {
    // x^0 l = 1 forces tr rho(l) = 2, i.e. u^2 (u^2 - 5) = 0.
    const SurgeryResult r = surgery_table(make_slope(0, 1));
    REQUIRE_FALSE(r.solutions.empty());
    for (const auto& s : r.solutions) {
        CHECK(s.degenerate);
        CHECK_FALSE(s.torsion.has_value());
        const auto flags = solution_flags(s);
        CHECK(std::find(flags.begin(), flags.end(), "degenerate") != flags.end());
    }
}

TEST_CASE("seed grid is configurable") {
    SolverOptions opts;
    opts.grid.radii = {1.0};
    opts.grid.angles = 6;
    const SurgeryResult r = surgery_table(make_slope(1, 1), opts);
    CHECK(r.seeds == 12);
    CHECK(r.failures.size() <= r.seeds);
}
