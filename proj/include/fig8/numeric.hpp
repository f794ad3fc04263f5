#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

namespace fig8 {

using Cx = std::complex<double>;

/// Dense complex matrix, row-major. Boundary maps of chain complexes and the
/// block matrices built from representation images use this type.
using CxMatrix = Eigen::Matrix<Cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline bool is_finite(Cx z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Returns z unchanged or throws OverflowError naming `what`.
Cx checked(Cx z, const char* what);

/// Relative difference |a - b| / max(1, |a|, |b|).
double rel_diff(Cx a, Cx b) noexcept;

struct Mat2 {
    Cx a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

    static constexpr Mat2 identity() noexcept { return {}; }
    static constexpr Mat2 zero() noexcept { return {0.0, 0.0, 0.0, 0.0}; }

    Cx det() const noexcept { return a11 * a22 - a12 * a21; }
    Cx trace() const noexcept { return a11 + a22; }
    bool is_finite() const noexcept;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Matrix product; throws OverflowError when an entry is not finite.
Mat2 mat2_mul(const Mat2& a, const Mat2& b);

/// Two-sided inverse via the adjugate. Throws SingularMatrix when
/// |det| <= singular_tol.
Mat2 mat2_inverse(const Mat2& a, double singular_tol = 1e-14);

/// a^n for any integer n (negative powers use the inverse).
Mat2 mat2_pow(const Mat2& a, int n);

inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat2_mul(a, b); }
Mat2 operator+(const Mat2& a, const Mat2& b) noexcept;
Mat2 operator-(const Mat2& a, const Mat2& b) noexcept;
Mat2 operator*(Cx k, const Mat2& a) noexcept;

Mat2 transpose(const Mat2& a) noexcept;

/// Frobenius norm.
double norm(const Mat2& a) noexcept;
double max_abs(const Mat2& a) noexcept;

/// True when |det - 1| <= tol.
bool is_unimodular(const Mat2& a, double tol = 1e-10) noexcept;

std::ostream& operator<<(std::ostream& os, const Mat2& a);

struct QuadraticRoots {
    Cx plus;   // (-b + sqrt(D)) / 2a with the principal square root
    Cx minus;  // (-b - sqrt(D)) / 2a
    Cx discriminant;
    bool coincident = false;
};

/// Roots of a r^2 + b r + c. The labeling is fixed by the principal branch of
/// sqrt(b^2 - 4ac); the smaller-magnitude root is recovered from the product
/// c/a to avoid cancellation. Throws DegenerateLeadingCoefficient when
/// |a| <= tol.
QuadraticRoots solve_quadratic(Cx a, Cx b, Cx c, double tol = 1e-14);

CxMatrix to_matrix(const Mat2& a);
double max_abs(const CxMatrix& m) noexcept;

/// Indices of the pivot columns chosen by full-pivoting row reduction, in
/// pivot order. Entries below rel_tol times the largest magnitude are zero.
std::vector<Eigen::Index> pivot_columns(const CxMatrix& m, double rel_tol = 1e-9);

std::size_t numerical_rank(const CxMatrix& m, double rel_tol = 1e-9);

/// Columns spanning the kernel of m; cols() == m.cols() - numerical_rank(m).
CxMatrix nullspace(const CxMatrix& m, double rel_tol = 1e-9);

/// Determinant by full-pivot LU. The empty matrix has determinant 1.
Cx determinant(const CxMatrix& m);

} // namespace fig8
