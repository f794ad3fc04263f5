#include "fig8/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/LU>

namespace fig8::fixtures {

Cx gaussian(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

Cx log_uniform_s(Rng& rng, double r_min, double r_max) {
    std::uniform_real_distribution<double> log_r(std::log(r_min), std::log(r_max));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double r = std::exp(log_r(rng));
    return std::polar(r, angle(rng));
}

Mat2 random_unimodular(Rng& rng) {
    for (;;) {
        const Cx a = gaussian(rng), b = gaussian(rng), c = gaussian(rng);
        if (std::abs(a) < 0.2) continue;
        return Mat2{a, b, c, (1.0 + b * c) / a};
    }
}

GeneratorImages random_commuting_pair(Rng& rng) {
    for (;;) {
        const Mat2 a = random_unimodular(rng);
        if (std::abs(a.trace() - 2.0) < 1e-2) continue;
        const Cx alpha = gaussian(rng);
        // det(alpha A + beta E) = alpha^2 + alpha beta tr A + beta^2 = 1
        const auto beta = solve_quadratic(1.0, alpha * a.trace(), alpha * alpha - 1.0).plus;
        const Mat2 b = alpha * a + beta * Mat2::identity();
        if (max_abs(b) > 50.0) continue;
        return {a, b};
    }
}

namespace {

CxMatrix random_matrix(Rng& rng, Eigen::Index n, Eigen::Index m) {
    CxMatrix out(n, m);
    for (Eigen::Index k = 0; k < out.size(); ++k) out.data()[k] = gaussian(rng);
    return out;
}

// Random well-conditioned invertible matrix: identity plus a modest perturbation.
CxMatrix random_invertible(Rng& rng, Eigen::Index n) {
    return CxMatrix::Identity(n, n) + 0.5 * random_matrix(rng, n, n);
}

} // namespace

AcyclicFixture random_acyclic_complex(Rng& rng, std::size_t max_top, std::size_t max_rank) {
    std::uniform_int_distribution<std::size_t> top_dist(1, max_top);
    std::uniform_int_distribution<std::size_t> rank_dist(1, max_rank);
    const std::size_t top = top_dist(rng);

    // ranks[i] = rank of d_{i+1} = dim B_i, for i = 0 .. top-1; zero outside.
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t i = 0; i < top; ++i) ranks[i] = rank_dist(rng);
    auto rank_below = [&](std::size_t i) { return i == 0 ? std::size_t{0} : ranks[i - 1]; };

    std::vector<std::size_t> dims(top + 1);
    for (std::size_t i = 0; i <= top; ++i) dims[i] = ranks[i] + rank_below(i);

    std::vector<CxMatrix> change(top + 1);
    Cx expected{1.0};
    for (std::size_t i = 0; i <= top; ++i) {
        const auto n = static_cast<Eigen::Index>(dims[i]);
        change[i] = random_invertible(rng, n);
        const Cx d = determinant(change[i]);
        expected = (i % 2 == 1) ? expected * d : expected / d;
    }

    std::vector<CxMatrix> boundaries;
    for (std::size_t i = 1; i <= top; ++i) {
        const auto r = static_cast<Eigen::Index>(rank_below(i));
        const CxMatrix block = random_invertible(rng, r);
        const Cx d = determinant(block);
        expected = (i % 2 == 0) ? expected * d : expected / d;
        CxMatrix normal = CxMatrix::Zero(static_cast<Eigen::Index>(dims[i - 1]), static_cast<Eigen::Index>(dims[i]));
        normal.block(0, static_cast<Eigen::Index>(ranks[i]), r, r) = block;
        const CxMatrix inv = Eigen::MatrixXcd(change[i]).inverse();
        boundaries.emplace_back(change[i - 1] * normal * inv);
    }
    return {ChainComplex(std::move(dims), std::move(boundaries)), expected};
}

GroupWord random_word(Rng& rng, std::size_t length) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<Letter> letters;
    letters.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        const int v = pick(rng);
        letters.push_back({v < 2 ? Generator::x : Generator::y, (v % 2) == 1});
    }
    return GroupWord::from_letters(letters);
}

} // namespace fig8::fixtures
