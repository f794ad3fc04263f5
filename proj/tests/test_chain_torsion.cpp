#include <doctest.h>

#include <cmath>
#include <random>

#include "fig8/chain_torsion.hpp"
#include "fig8/errors.hpp"
#include "fig8/fixtures.hpp"
#include "fig8/riley.hpp"
#include "fig8/surgery.hpp"
#include "fig8/torsion_formulas.hpp"

using namespace fig8;
using fixtures::Rng;

namespace {

CxMatrix mat(Eigen::Index r, Eigen::Index c, std::initializer_list<Cx> entries) {
    CxMatrix m(r, c);
    auto it = entries.begin();
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = *it++;
    return m;
}

// Rescales the k-th preferred basis vector of C_i by lambda: column k of d_i
// is multiplied by lambda and row k of d_{i+1} divided by it.
ChainComplex rescale(const ChainComplex& c, std::size_t i, Eigen::Index k, Cx lambda) {
    std::vector<CxMatrix> bs;
    for (std::size_t j = 1; j <= c.top(); ++j) bs.push_back(c.boundary(j));
    if (i >= 1) bs[i - 1].col(k) *= lambda;
    if (i + 1 <= c.top()) bs[i].row(k) /= lambda;
    return ChainComplex(c.dims(), bs);
}

ChainComplex twisted_torus_at_s2() {
    const RileyPoint p = solve_t(2.0).plus;
    const GeneratorImages images = rep_matrices(p);
    return torus_complex({images.x, evaluate_word(longitude_word(), images)});
}

} // namespace

TEST_CASE("acyclicity fixtures") {
    CHECK(is_acyclic(ChainComplex({2, 2}, {CxMatrix::Identity(2, 2)})));
    CHECK_FALSE(is_acyclic(ChainComplex({1, 1}, {CxMatrix::Zero(1, 1)})));
    CHECK(is_acyclic(twisted_torus_at_s2()));
}

TEST_CASE("torsion of small complexes from the definition") {
    // 0 -> C --[a]--> C -> 0. b_0 = a c_1 spans C_0 and needs no lift, so
    // [b_0 / c_0] = a enters with exponent -1 and [b~_0 / c_1] = 1.
    SUBCASE("[2]") {
        const auto t = torsion(ChainComplex({1, 1}, {mat(1, 1, {2.0})}));
        CHECK(std::abs(t.value - 0.5) < 1e-15);
    }
    SUBCASE("identity") {
        CHECK(std::abs(torsion(ChainComplex({2, 2}, {CxMatrix::Identity(2, 2)})).value - 1.0) < 1e-15);
    }
    SUBCASE("0 -> C -> C^2 -> C -> 0") {
        // d_2 = (1, 0)^T, d_1 = (0, 3). b_1 = e_1 with lift e_2 in C_1,
        // b_0 = 3 in C_0. tau = [b_1 b~_0 / c_1] / [b_0 / c_0] = det(e1, e2) / 3.
        const ChainComplex c({1, 2, 1}, {mat(1, 2, {0.0, 3.0}), mat(2, 1, {1.0, 0.0})});
        CHECK(std::abs(torsion(c).value - 1.0 / 3.0) < 1e-15);
    }
    SUBCASE("explicit base change in the middle degree") {
        // New basis of C_1 given by the columns of Q: d_2 -> Q^-1 d_2,
        // d_1 -> d_1 Q, and tau is divided by det Q.
        // Q = [[1, 0], [1, 1]]
        const ChainComplex unimodular({1, 2, 1}, {mat(1, 2, {3.0, 3.0}), mat(2, 1, {1.0, -1.0})});
        CHECK(std::abs(torsion(unimodular).value - 1.0 / 3.0) < 1e-15);
        // Q = [[1, 0], [1, 2]]
        const ChainComplex doubled({1, 2, 1}, {mat(1, 2, {3.0, 6.0}), mat(2, 1, {1.0, -0.5})});
        CHECK(std::abs(torsion(doubled).value - 1.0 / 6.0) < 1e-15);
    }
}

TEST_CASE("torsion preconditions") {
    CHECK_THROWS_AS(torsion(ChainComplex({1, 1}, {CxMatrix::Zero(1, 1)})), NotAcyclic);
    CHECK_THROWS_AS(ChainComplex({1, 2}, {CxMatrix::Identity(2, 2)}), DimensionMismatch);
    CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {mat(1, 1, {1.0}), mat(1, 1, {1.0})}), InvalidComplex);
    CHECK_THROWS_AS(ChainComplex({1, 1}, {}), DimensionMismatch);
}

TEST_CASE("perturbed bases give the same torsion on fixed complexes") {
    const ChainComplex two({1, 1}, {mat(1, 1, {2.0})});
    const ChainComplex id({2, 2}, {CxMatrix::Identity(2, 2)});
    const ChainComplex torus = twisted_torus_at_s2();
    const Cx torus_ref = torsion(torus).value;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK(std::abs(torsion_with_basis_perturbation(two, seed).value - 0.5) < 1e-12);
        CHECK(std::abs(torsion_with_basis_perturbation(id, seed).value - 1.0) < 1e-12);
        CHECK(rel_diff(torsion_with_basis_perturbation(torus, seed).value, torus_ref) < 1e-9);
    }
}

TEST_CASE("basis independence on random acyclic complexes") {
    Rng rng(21);
    for (int n = 0; n < 20; ++n) {
        const auto fx = fixtures::random_acyclic_complex(rng);
        const Cx ref = torsion(fx.complex).value;
        for (std::uint64_t seed = 0; seed < 10; ++seed)
            CHECK(rel_diff(torsion_with_basis_perturbation(fx.complex, seed).value, ref) <= 1e-8);
    }
}

TEST_CASE("normal-form complexes have the constructed torsion") {
    Rng rng(22);
    for (int n = 0; n < 100; ++n) {
        const auto fx = fixtures::random_acyclic_complex(rng);
        CHECK(rel_diff(torsion(fx.complex).value, fx.expected) <= 1e-8);
    }
}

TEST_CASE("rescaling a preferred basis vector") {
    Rng rng(23);
    std::uniform_real_distribution<double> unit(0.5, 2.0);
    int tried = 0;
    for (int n = 0; n < 50; ++n) {
        const auto fx = fixtures::random_acyclic_complex(rng);
        const ChainComplex& c = fx.complex;
        std::uniform_int_distribution<std::size_t> degree(0, c.top());
        const std::size_t i = degree(rng);
        if (c.dim(i) == 0) continue;
        const Cx lambda(unit(rng), unit(rng) - 1.0);
        const Cx scaled = torsion(rescale(c, i, 0, lambda)).value;
        const Cx expected = torsion(c).value * (i % 2 == 0 ? lambda : 1.0 / lambda);
        CHECK(rel_diff(scaled, expected) <= 1e-8);
        ++tried;
    }
    CHECK(tried > 20);
}

TEST_CASE("twisted torus complexes have unit torsion magnitude") {
    Rng rng(24);
    for (int n = 0; n < 100; ++n) {
        const auto pair = fixtures::random_commuting_pair(rng);
        CHECK(std::abs(std::abs(torsion_torus_oracle(pair).value) - 1.0) <= 1e-8);
    }
}
