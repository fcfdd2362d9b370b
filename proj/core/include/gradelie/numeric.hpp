#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "gradelie/matrix.hpp"

namespace gradelie {

using Complex = std::complex<double>;
using NumMat = Eigen::MatrixXcd;
using NumVec = Eigen::VectorXcd;

/// Nearest double per rational part. Throws std::overflow_error if a part is
/// outside the double range.
NumMat to_numeric(const Mat& a);
NumVec to_numeric(const Vec& v);

/// Throws NumericError if any entry is NaN or infinite.
void require_finite(const NumMat& a);

/// Best rational approximation of `x` by continued fractions, accepted only
/// if within `tol` and with denominator at most `max_den`.
std::optional<Rational> rationalize(double x, double tol = 1e-9, std::int64_t max_den = 1'000'000);
std::optional<Scalar> rationalize(Complex z, double tol = 1e-9, std::int64_t max_den = 1'000'000);

/// Orthonormal basis (as columns) of the numeric null space of `a`:
/// right singular vectors whose singular value is at most tol·max(1, σ_max).
NumMat numeric_kernel(const NumMat& a, double tol);
/// The `count` right singular vectors with the smallest singular values.
NumMat smallest_singular_vectors(const NumMat& a, Eigen::Index count);

/// Reduced row-echelon form of the row space of `rows` with partial pivoting;
/// entries below `tol` are treated as zero. Used to expose rational structure
/// of numerically computed subspaces before rationalization.
NumMat numeric_rref(NumMat rows, double tol);

}  // namespace gradelie
