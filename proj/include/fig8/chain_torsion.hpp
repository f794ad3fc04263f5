#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fig8/config.hpp"
#include "fig8/numeric.hpp"

namespace fig8 {

/// A finite based chain complex 0 -> C_m -> ... -> C_1 -> C_0 -> 0 over C.
/// The preferred basis of each C_i is the standard one; boundary(i) is the
/// dim C_{i-1} x dim C_i matrix of d_i in those bases.
class ChainComplex {
public:
    /// boundaries[k] is d_{k+1}. Throws DimensionMismatch when the shapes do
    /// not match dims, InvalidComplex when d_i d_{i+1} is not zero to within
    /// constraint_tol relative to the entry scale.
    ChainComplex(std::vector<std::size_t> dims, std::vector<CxMatrix> boundaries,
                 double constraint_tol = Tolerances{}.constraint);

    /// Top degree m.
    std::size_t top() const noexcept { return dims_.size() - 1; }
    std::size_t dim(std::size_t i) const { return dims_.at(i); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

    /// d_i for 1 <= i <= m; d_0 and d_{m+1} are zero maps and are returned as
    /// empty-shaped matrices of the right size.
    CxMatrix boundary(std::size_t i) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<CxMatrix> boundaries_;
};

struct TorsionValue {
    Cx value{1.0};
    bool sign_ambiguous = false;
};

/// rank d_i + rank d_{i+1} == dim C_i in every degree.
bool is_acyclic(const ChainComplex& c, double rel_tol = Tolerances{}.pivot);

/// Alternating product prod_i [b_i, b~_{i-1} / c_i]^((-1)^(i+1)), where
/// [b / c] is the determinant of the matrix expressing b in the preferred
/// basis c. b_i is the image of the pivot columns of d_{i+1}, and those
/// standard vectors are the lift. With this reading 0 -> C --[a]--> C -> 0
/// has torsion 1/a. Throws NotAcyclic.
TorsionValue torsion(const ChainComplex& c, double rel_tol = Tolerances{}.pivot);

/// Same quantity, but each b_i is the image of a random (seeded) family in
/// C_{i+1} and each lift is perturbed by a random kernel element.
TorsionValue torsion_with_basis_perturbation(const ChainComplex& c, std::uint64_t seed,
                                             double rel_tol = Tolerances{}.pivot);

} // namespace fig8
