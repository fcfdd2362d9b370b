#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include "gradelie/rational.hpp"

namespace gradelie {

/// Exact element re + im·i of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts `RAT`, `RATi`, `RAT+RATi`, `RAT-RATi` where RAT is an
  /// optionally signed integer or p/q in lowest terms.
  static GaussianRational parse(std::string_view text);

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_one() const { return re_.is_one() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  /// |z|² = re² + im².
  [[nodiscard]] Rational norm2() const { return re_ * re_ + im_ * im_; }
  [[nodiscard]] std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  [[nodiscard]] std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  Rational re_;
  Rational im_;
};

using Scalar = GaussianRational;

/// Multiply-accumulate: acc += a·b, skipping the imaginary parts when both
/// factors are real.
void fused_add_mul(Scalar& acc, const Scalar& a, const Scalar& b);

}  // namespace gradelie
