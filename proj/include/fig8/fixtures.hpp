#pragma once

#include <cstddef>
#include <random>

#include "fig8/chain_torsion.hpp"
#include "fig8/group_words.hpp"
#include "fig8/riley.hpp"

namespace fig8::fixtures {

using Rng = std::mt19937_64;

/// Complex number with independent standard normal parts.
Cx gaussian(Rng& rng);

/// |s| log-uniform on [r_min, r_max], argument uniform.
Cx log_uniform_s(Rng& rng, double r_min = 0.3, double r_max = 3.0);

/// Random point of SL(2, C) with entries of order one.
Mat2 random_unimodular(Rng& rng);

/// A random unimodular A with tr A != 2 and a commuting B = alpha A + beta E
/// (beta solving det B = 1).
GeneratorImages random_commuting_pair(Rng& rng);

/// Acyclic complex built from a normal form with known torsion:
/// d_i = P_{i-1} D_i P_i^-1 where D_i maps the lift block of C_i
/// isomorphically onto the image block of C_{i-1} by a random matrix M_i.
/// expected = prod_i det(M_i)^((-1)^i) * prod_i det(P_i)^((-1)^(i+1)).
struct AcyclicFixture {
    ChainComplex complex;
    Cx expected;
};

AcyclicFixture random_acyclic_complex(Rng& rng, std::size_t max_top = 3, std::size_t max_rank = 3);

/// Random word of the given length over x, y, X, Y (reduced afterwards).
GroupWord random_word(Rng& rng, std::size_t length);

} // namespace fig8::fixtures
