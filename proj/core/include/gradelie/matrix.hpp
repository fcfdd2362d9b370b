#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gradelie/gaussian.hpp"

namespace gradelie {

using Vec = std::vector<Scalar>;

/// Dense exact matrix over Q(i), row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-wise literal; every row must have the same length.
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Elementary matrix E_ij (zero-based indices).
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  static Mat diagonal(const Vec& entries);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_scalar_multiple_of_identity() const;
  [[nodiscard]] bool is_upper_triangular() const;
  [[nodiscard]] bool is_real() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  [[nodiscard]] const std::vector<Scalar>& data() const { return data_; }

  [[nodiscard]] Vec row(std::size_t i) const;
  [[nodiscard]] Vec column(std::size_t j) const;
  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Scalar trace() const;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const Scalar& s);
  Mat operator-() const;

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  [[nodiscard]] std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.to_string(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Vector helpers.
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& s);
/// Bilinear (non-conjugating) dot product.
Scalar dot(const Vec& a, const Vec& b);

/// [a, b] = ab − ba.
Mat bracket(const Mat& a, const Mat& b);
/// Jordan product a∘b = ab + ba.
Mat jordan_product(const Mat& a, const Mat& b);
/// Lie triple product [a, [b, c]].
Mat triple_product(const Mat& a, const Mat& b, const Mat& c);
Mat kronecker(const Mat& a, const Mat& b);
Mat power(const Mat& a, std::size_t k);
/// tr(ab) without forming the product.
Scalar trace_of_product(const Mat& a, const Mat& b);

/// True iff a^n = 0 for n = a.rows(), computed exactly.
bool is_nilpotent_exact(const Mat& a);

/// Row-major flattening of a square matrix into a coordinate vector of gl(n).
Vec flatten(const Mat& a);
Mat unflatten(const Vec& v, std::size_t n);

/// Reduced row-echelon form computed in place; returns the pivot columns.
std::vector<std::size_t> rref_in_place(Mat& m);
std::size_t rank(Mat m);
/// Basis of the right null space {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel(const Mat& m);
Scalar determinant(Mat m);
std::optional<Mat> inverse(const Mat& m);

}  // namespace gradelie
