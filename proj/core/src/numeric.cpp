#include "gradelie/numeric.hpp"

#include <cmath>

#include "gradelie/error.hpp"

namespace gradelie {

NumMat to_numeric(const Mat& a) {
  NumMat out(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_complex();
  return out;
}

NumVec to_numeric(const Vec& v) {
  NumVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_complex();
  return out;
}

void require_finite(const NumMat& a) {
  if (!a.allFinite()) throw NumericError("numeric matrix has non-finite entries");
}

std::optional<Rational> rationalize(double x, double tol, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  if (std::abs(x) > 9.0e15) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) return Rational(h, k);
    if (frac < 1e-15) break;
    const double inv = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - std::floor(inv);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den || k_next <= 0) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) return Rational(h, k);
  return std::nullopt;
}

std::optional<Scalar> rationalize(Complex z, double tol, std::int64_t max_den) {
  auto re = rationalize(z.real(), tol, max_den);
  auto im = rationalize(z.imag(), tol, max_den);
  if (!re || !im) return std::nullopt;
  return Scalar(*re, *im);
}

NumMat numeric_kernel(const NumMat& a, double tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return NumMat::Identity(n, n);
  Eigen::JacobiSVD<NumMat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * scale) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

NumMat smallest_singular_vectors(const NumMat& a, Eigen::Index count) {
  Eigen::JacobiSVD<NumMat> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(count);
}

NumMat numeric_rref(NumMat m, double tol) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index best = r;
    for (Eigen::Index i = r + 1; i < m.rows(); ++i)
      if (std::abs(m(i, c)) > std::abs(m(best, c))) best = i;
    if (std::abs(m(best, c)) <= tol) {
      for (Eigen::Index i = r; i < m.rows(); ++i) m(i, c) = 0.0;
      continue;
    }
    m.row(r).swap(m.row(best));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != r) m.row(i) -= m(i, c) * m.row(r);
    ++r;
  }
  return m.topRows(r);
}

}  // namespace gradelie
