#pragma once

// Independent reference computations used only by tests.

#include <cstdint>
#include <random>
#include <vector>

#include "gradelie/matrix.hpp"

namespace oracle {

using gradelie::Mat;
using gradelie::Scalar;

/// Coefficients c_0..c_n of det(tI − a) = Σ c_k t^k by Faddeev–LeVerrier.
inline std::vector<Scalar> char_poly(const Mat& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Mat m = Mat::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    const Mat am = a * m;
    Scalar tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Scalar(static_cast<std::int64_t>(k));
  }
  return c;
}

/// Nilpotent iff the characteristic polynomial is t^n.
inline bool nilpotent_by_char_poly(const Mat& a) {
  const auto c = char_poly(a);
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    if (!c[k].is_zero()) return false;
  return true;
}

/// Gaussian-integer matrix with entries re, im in [lo, hi].
inline Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -2, int hi = 2,
                         bool complex = false) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = complex ? Scalar(gradelie::Rational(d(rng)), gradelie::Rational(d(rng))) : Scalar(d(rng));
  return m;
}

/// Determinant by cofactor expansion.
inline Scalar det_cofactor(const Mat& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  Scalar total;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Scalar term = a(0, j) * det_cofactor(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace oracle
