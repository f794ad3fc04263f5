#include <doctest.h>

#include <cmath>
#include <random>

#include "fig8/errors.hpp"
#include "fig8/fixtures.hpp"
#include "fig8/numeric.hpp"

using namespace fig8;
using fixtures::Rng;

namespace {

bool close(const Mat2& a, const Mat2& b, double tol) { return norm(a - b) <= tol * std::max(1.0, norm(a)); }

} // namespace

TEST_CASE("mat2_mul on small fixtures") {
    CHECK(Mat2::identity() * Mat2::identity() == Mat2::identity());

    // Riley images at s = 1, t = 1: x y = [[0, 1], [-1, 1]]
    const Mat2 x{1.0, 1.0, 0.0, 1.0};
    const Mat2 y{1.0, 0.0, -1.0, 1.0};
    CHECK(close(x * y, Mat2{0.0, 1.0, -1.0, 1.0}, 1e-15));

    const Mat2 a{2.0, 1.0, 0.0, 0.5};
    CHECK(close(a * mat2_inverse(a), Mat2::identity(), 1e-15));
}

TEST_CASE("mat2_mul reports overflow") {
    const Mat2 huge{1e200, 1e200, 1e200, 1e200};
    CHECK_THROWS_AS(huge * huge, OverflowError);
}

TEST_CASE("mat2_inverse") {
    const Mat2 a{2.0, 1.0, 0.0, 0.5};
    CHECK(close(mat2_inverse(a), Mat2{0.5, -1.0, 0.0, 2.0}, 1e-15));
    CHECK_THROWS_AS(mat2_inverse(Mat2::zero()), SingularMatrix);
    CHECK_THROWS_AS(mat2_inverse(Mat2{1.0, 2.0, 2.0, 4.0}), SingularMatrix);
}

TEST_CASE("mat2_pow matches repeated products") {
    const Mat2 x{Cx(1.3, 0.2), 1.0, 0.0, 1.0 / Cx(1.3, 0.2)};
    CHECK(mat2_pow(x, 0) == Mat2::identity());
    CHECK(close(mat2_pow(x, 3), x * x * x, 1e-14));
    CHECK(close(mat2_pow(x, -2) * mat2_pow(x, 2), Mat2::identity(), 1e-13));
}

TEST_CASE("determinant is multiplicative on random unimodular pairs") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Mat2 a = fixtures::random_unimodular(rng);
        const Mat2 b = fixtures::random_unimodular(rng);
        const Mat2 ab = a * b;
        CHECK(std::abs(ab.det() - a.det() * b.det()) <= 1e-12 * std::max(1.0, norm(a) * norm(b) * norm(a) * norm(b)));
        CHECK(is_unimodular(ab, 1e-9 * std::max(1.0, norm(ab) * norm(ab))));
    }
}

TEST_CASE("inverse is two-sided on random matrices") {
    Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        const Mat2 a{fixtures::gaussian(rng), fixtures::gaussian(rng), fixtures::gaussian(rng), fixtures::gaussian(rng)};
        if (std::abs(a.det()) < 1e-3) continue;
        const Mat2 inv = mat2_inverse(a);
        const double cond = norm(a) * norm(inv);
        CHECK(norm(a * inv - Mat2::identity()) <= 1e-13 * cond);
        CHECK(norm(inv * a - Mat2::identity()) <= 1e-13 * cond);
    }
}

TEST_CASE("solve_quadratic fixtures") {
    SUBCASE("distinct real roots") {
        const auto r = solve_quadratic(1.0, -3.0, 2.0);
        CHECK(std::abs(r.plus - 2.0) < 1e-15);
        CHECK(std::abs(r.minus - 1.0) < 1e-15);
        CHECK_FALSE(r.coincident);
    }
    SUBCASE("complex roots use the principal square root for plus") {
        const auto r = solve_quadratic(1.0, 1.0, 1.0);
        CHECK(std::abs(r.plus - Cx(-0.5, std::sqrt(3.0) / 2)) < 1e-15);
        CHECK(std::abs(r.minus - Cx(-0.5, -std::sqrt(3.0) / 2)) < 1e-15);
    }
    SUBCASE("double root") {
        const auto r = solve_quadratic(1.0, -2.0, 1.0);
        CHECK(r.coincident);
        CHECK(std::abs(r.plus - 1.0) < 1e-15);
        CHECK(std::abs(r.minus - 1.0) < 1e-15);
    }
    SUBCASE("cancellation-prone coefficients keep the small root accurate") {
        const auto r = solve_quadratic(1.0, -1e8, 1.0);
        CHECK(std::abs(r.minus - 1e-8) < 1e-22);
    }
    SUBCASE("vanishing leading coefficient") {
        CHECK_THROWS_AS(solve_quadratic(0.0, 1.0, 1.0), DegenerateLeadingCoefficient);
    }
}

TEST_CASE("solve_quadratic residuals on random coefficients") {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Cx a = fixtures::gaussian(rng), b = fixtures::gaussian(rng), c = fixtures::gaussian(rng);
        if (std::abs(a) < 1e-3) continue;
        const auto r = solve_quadratic(a, b, c);
        for (Cx root : {r.plus, r.minus}) {
            const double scale = std::max({std::abs(a * root * root), std::abs(b * root), std::abs(c), 1.0});
            CHECK(std::abs(a * root * root + b * root + c) <= 1e-12 * scale);
        }
        CHECK(std::abs(r.plus + r.minus + b / a) <= 1e-10 * std::max(1.0, std::abs(b / a)));
    }
}

TEST_CASE("nullspace fixtures") {
    SUBCASE("identity has trivial kernel") {
        CHECK(nullspace(CxMatrix::Identity(2, 2)).cols() == 0);
    }
    SUBCASE("row [1, 1] has kernel spanned by (1, -1)") {
        CxMatrix m(1, 2);
        m << 1.0, 1.0;
        const CxMatrix k = nullspace(m);
        REQUIRE(k.cols() == 1);
        CHECK(std::abs(k(0, 0) + k(1, 0)) < 1e-15);
        CHECK(std::abs(k(0, 0)) > 0.1);
    }
    SUBCASE("rho(x) - E at s = 2 is invertible") {
        const Mat2 x{2.0, 1.0, 0.0, 0.5};
        CHECK(nullspace(to_matrix(x - Mat2::identity())).cols() == 0);
    }
    SUBCASE("zero matrix has full kernel") {
        CHECK(nullspace(CxMatrix::Zero(2, 3)).cols() == 3);
    }
}

TEST_CASE("rank plus nullity equals the column count") {
    Rng rng(14);
    std::uniform_int_distribution<int> size(1, 5);
    for (int i = 0; i < 300; ++i) {
        const int rows = size(rng), cols = size(rng), inner = size(rng);
        CxMatrix a(rows, inner), b(inner, cols);
        for (auto& z : a.reshaped()) z = fixtures::gaussian(rng);
        for (auto& z : b.reshaped()) z = fixtures::gaussian(rng);
        const CxMatrix m = a * b;  // rank <= min(rows, inner, cols)
        const CxMatrix k = nullspace(m);
        const std::size_t rank = numerical_rank(m);
        CHECK(rank == static_cast<std::size_t>(std::min({rows, cols, inner})));
        CHECK(rank + static_cast<std::size_t>(k.cols()) == static_cast<std::size_t>(cols));
        if (k.cols() > 0) CHECK(max_abs(CxMatrix(m * k)) <= 1e-10 * std::max(1.0, max_abs(m)) * max_abs(k));
        CHECK(pivot_columns(m).size() == rank);
    }
}

TEST_CASE("determinant of dynamic matrices") {
    CxMatrix m(3, 3);
    m << 2.0, 0.0, 1.0, 1.0, 3.0, 0.0, 0.0, 1.0, 4.0;
    CHECK(std::abs(determinant(m) - 25.0) < 1e-13);  // 2*12 - 0 + 1*1
    CHECK(determinant(CxMatrix(0, 0)) == Cx(1.0));
    CHECK(std::abs(determinant(CxMatrix::Zero(2, 2))) == 0.0);
    CHECK_THROWS_AS(determinant(CxMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("rel_diff") {
    CHECK(rel_diff(1.0, 1.0) == 0.0);
    CHECK(rel_diff(1e-20, 0.0) == doctest::Approx(1e-20));
    CHECK(rel_diff(100.0, 101.0) == doctest::Approx(1.0 / 101.0));
}
