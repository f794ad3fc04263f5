#include "fig8/chain_torsion.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "fig8/errors.hpp"

namespace fig8 {

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<CxMatrix> boundaries,
                           double constraint_tol)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw DimensionMismatch("chain complex needs at least C_0");
    if (boundaries_.size() != dims_.size() - 1)
        throw DimensionMismatch("expected " + std::to_string(dims_.size() - 1) + " boundary maps, got " +
                                std::to_string(boundaries_.size()));
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        const auto& d = boundaries_[k];
        if (static_cast<std::size_t>(d.rows()) != dims_[k] || static_cast<std::size_t>(d.cols()) != dims_[k + 1])
            throw DimensionMismatch("d_" + std::to_string(k + 1) + " must be " + std::to_string(dims_[k]) + "x" +
                                    std::to_string(dims_[k + 1]));
    }
    for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k) {
        const auto& lower = boundaries_[k];
        const auto& upper = boundaries_[k + 1];
        if (lower.size() == 0 || upper.size() == 0) continue;
        const double scale = std::max(1.0, max_abs(lower) * max_abs(upper) * static_cast<double>(lower.cols()));
        const double defect = max_abs(CxMatrix(lower * upper));
        if (defect > constraint_tol * scale)
            throw InvalidComplex("d_" + std::to_string(k + 1) + " d_" + std::to_string(k + 2) +
                                 " != 0 (defect " + std::to_string(defect) + ")");
    }
}

CxMatrix ChainComplex::boundary(std::size_t i) const {
    const auto m = top();
    if (i == 0) return CxMatrix::Zero(0, static_cast<Eigen::Index>(dims_[0]));
    if (i > m) return CxMatrix::Zero(static_cast<Eigen::Index>(dims_[m]), 0);
    return boundaries_[i - 1];
}

bool is_acyclic(const ChainComplex& c, double rel_tol) {
    for (std::size_t i = 0; i <= c.top(); ++i) {
        const auto r = numerical_rank(c.boundary(i), rel_tol) + numerical_rank(c.boundary(i + 1), rel_tol);
        if (r != c.dim(i)) return false;
    }
    return true;
}

namespace {

// Chosen bases: images[i] holds the columns of b_i in C_i, lifts[i] the
// columns of its lift in C_{i+1}.
struct BasisChoice {
    std::vector<CxMatrix> images;
    std::vector<CxMatrix> lifts;
};

Cx alternating_product(const ChainComplex& c, const BasisChoice& choice) {
    Cx tau{1.0};
    for (std::size_t i = 0; i <= c.top(); ++i) {
        const auto n = static_cast<Eigen::Index>(c.dim(i));
        const CxMatrix& b = choice.images[i];
        const CxMatrix lifted = i > 0 ? choice.lifts[i - 1] : CxMatrix(n, 0);
        if (b.cols() + lifted.cols() != n) throw NotAcyclic("basis count mismatch in degree " + std::to_string(i));
        CxMatrix basis(n, n);
        basis.leftCols(b.cols()) = b;
        basis.rightCols(lifted.cols()) = lifted;
        const Cx det = determinant(basis);
        if (std::abs(det) == 0.0) throw NotAcyclic("degenerate basis in degree " + std::to_string(i));
        tau = (i % 2 == 1) ? tau * det : tau / det;
    }
    return checked(tau, "torsion");
}

void require_acyclic(const ChainComplex& c, double rel_tol) {
    if (!is_acyclic(c, rel_tol)) throw NotAcyclic("homology does not vanish");
}

} // namespace

TorsionValue torsion(const ChainComplex& c, double rel_tol) {
    require_acyclic(c, rel_tol);
    BasisChoice choice;
    for (std::size_t i = 0; i <= c.top(); ++i) {
        const CxMatrix d = c.boundary(i + 1);
        const auto cols = pivot_columns(d, rel_tol);
        const auto r = static_cast<Eigen::Index>(cols.size());
        CxMatrix image(d.rows(), r);
        CxMatrix lift = CxMatrix::Zero(d.cols(), r);
        for (Eigen::Index k = 0; k < r; ++k) {
            image.col(k) = d.col(cols[static_cast<std::size_t>(k)]);
            lift(cols[static_cast<std::size_t>(k)], k) = 1.0;
        }
        choice.images.push_back(std::move(image));
        choice.lifts.push_back(std::move(lift));
    }
    return {alternating_product(c, choice), false};
}

TorsionValue torsion_with_basis_perturbation(const ChainComplex& c, std::uint64_t seed, double rel_tol) {
    require_acyclic(c, rel_tol);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_matrix = [&](Eigen::Index rows, Eigen::Index cols) {
        CxMatrix m(rows, cols);
        for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = Cx{gauss(rng), gauss(rng)};
        return m;
    };

    BasisChoice choice;
    for (std::size_t i = 0; i <= c.top(); ++i) {
        const CxMatrix d = c.boundary(i + 1);
        const auto r = static_cast<Eigen::Index>(numerical_rank(d, rel_tol));
        CxMatrix lift = random_matrix(d.cols(), r);
        CxMatrix image = d * lift;
        if (static_cast<Eigen::Index>(numerical_rank(image, rel_tol)) != r)
            throw NotAcyclic("random family failed to span the image");
        const CxMatrix kernel = nullspace(d, rel_tol);
        if (kernel.cols() > 0) lift += kernel * random_matrix(kernel.cols(), r);
        choice.images.push_back(std::move(image));
        choice.lifts.push_back(std::move(lift));
    }
    return {alternating_product(c, choice), false};
}

} // namespace fig8
