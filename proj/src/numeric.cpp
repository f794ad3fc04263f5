#include "fig8/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <Eigen/LU>

#include "fig8/errors.hpp"

namespace fig8 {

Cx checked(Cx z, const char* what) {
    if (!is_finite(z)) throw OverflowError(std::string("non-finite value in ") + what);
    return z;
}

double rel_diff(Cx a, Cx b) noexcept {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

bool Mat2::is_finite() const noexcept {
    return fig8::is_finite(a11) && fig8::is_finite(a12) && fig8::is_finite(a21) && fig8::is_finite(a22);
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
           a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    if (!r.is_finite()) throw OverflowError("non-finite entry in 2x2 product");
    return r;
}

Mat2 mat2_inverse(const Mat2& a, double singular_tol) {
    const Cx d = a.det();
    if (!(std::abs(d) > singular_tol)) throw SingularMatrix("2x2 determinant is zero");
    Mat2 r{a.a22 / d, -a.a12 / d, -a.a21 / d, a.a11 / d};
    if (!r.is_finite()) throw OverflowError("non-finite entry in 2x2 inverse");
    return r;
}

Mat2 mat2_pow(const Mat2& a, int n) {
    Mat2 base = n < 0 ? mat2_inverse(a) : a;
    unsigned k = n < 0 ? static_cast<unsigned>(-static_cast<long>(n)) : static_cast<unsigned>(n);
    Mat2 result = Mat2::identity();
    while (k != 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k != 0) base = base * base;
    }
    return result;
}

Mat2 operator+(const Mat2& a, const Mat2& b) noexcept {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) noexcept {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

Mat2 operator*(Cx k, const Mat2& a) noexcept { return {k * a.a11, k * a.a12, k * a.a21, k * a.a22}; }

Mat2 transpose(const Mat2& a) noexcept { return {a.a11, a.a21, a.a12, a.a22}; }

double norm(const Mat2& a) noexcept {
    return std::sqrt(std::norm(a.a11) + std::norm(a.a12) + std::norm(a.a21) + std::norm(a.a22));
}

double max_abs(const Mat2& a) noexcept {
    return std::max({std::abs(a.a11), std::abs(a.a12), std::abs(a.a21), std::abs(a.a22)});
}

bool is_unimodular(const Mat2& a, double tol) noexcept { return std::abs(a.det() - 1.0) <= tol; }

std::ostream& operator<<(std::ostream& os, const Mat2& a) {
    return os << "[[" << a.a11 << ", " << a.a12 << "], [" << a.a21 << ", " << a.a22 << "]]";
}

QuadraticRoots solve_quadratic(Cx a, Cx b, Cx c, double tol) {
    if (!(std::abs(a) > tol)) throw DegenerateLeadingCoefficient("|a| is below tolerance");
    const Cx disc = b * b - 4.0 * a * c;
    const Cx root = std::sqrt(disc);  // principal branch
    const Cx num_plus = -b + root;
    const Cx num_minus = -b - root;

    QuadraticRoots r;
    r.discriminant = disc;
    // Compute the larger-magnitude numerator directly, the other root via
    // r+ * r- = c / a.
    if (std::abs(num_plus) >= std::abs(num_minus)) {
        r.plus = num_plus / (2.0 * a);
        r.minus = std::abs(num_plus) > 0.0 ? 2.0 * c / num_plus : Cx{0.0};
    } else {
        r.minus = num_minus / (2.0 * a);
        r.plus = 2.0 * c / num_minus;
    }
    const double scale = std::max({std::norm(b), std::abs(4.0 * a * c), std::numeric_limits<double>::min()});
    r.coincident = std::abs(disc) <= 1e-12 * scale;
    checked(r.plus, "quadratic root");
    checked(r.minus, "quadratic root");
    return r;
}

CxMatrix to_matrix(const Mat2& a) {
    CxMatrix m(2, 2);
    m << a.a11, a.a12, a.a21, a.a22;
    return m;
}

double max_abs(const CxMatrix& m) noexcept {
    double best = 0.0;
    for (Eigen::Index i = 0; i < m.size(); ++i) best = std::max(best, std::abs(m.data()[i]));
    return best;
}

namespace {

// Full-pivoting LU with the threshold measured against the largest entry, so
// the rank test is "pivot <= rel_tol * max |m_ij|".
Eigen::FullPivLU<Eigen::MatrixXcd> full_piv_lu(const CxMatrix& m, double rel_tol) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    lu.setThreshold(rel_tol);
    return lu;
}

} // namespace

std::vector<Eigen::Index> pivot_columns(const CxMatrix& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0 || max_abs(m) == 0.0) return {};
    const auto lu = full_piv_lu(m, rel_tol);
    const auto rank = lu.rank();
    std::vector<Eigen::Index> cols;
    cols.reserve(static_cast<std::size_t>(rank));
    for (Eigen::Index k = 0; k < rank; ++k) cols.push_back(lu.permutationQ().indices()(k));
    return cols;
}

std::size_t numerical_rank(const CxMatrix& m, double rel_tol) {
    return pivot_columns(m, rel_tol).size();
}

CxMatrix nullspace(const CxMatrix& m, double rel_tol) {
    const Eigen::Index n = m.cols();
    if (m.rows() == 0 || max_abs(m) == 0.0) return CxMatrix::Identity(n, n);
    if (n == 0) return CxMatrix(0, 0);
    const auto lu = full_piv_lu(m, rel_tol);
    if (lu.rank() == n) return CxMatrix(n, 0);
    return lu.kernel();
}

Cx determinant(const CxMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() == 0) return Cx{1.0};
    return Eigen::FullPivLU<Eigen::MatrixXcd>(m).determinant();
}

} // namespace fig8
