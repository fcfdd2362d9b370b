#include "gradelie/matrix.hpp"

#include <sstream>
#include <utility>

#include "gradelie/error.hpp"

namespace gradelie {
namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

void require_square_pair(const Mat& a, const Mat& b, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix is not square");
  require_same_shape(a, b, op);
}

}  // namespace

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = Scalar(1);
  return m;
}

Mat Mat::diagonal(const Vec& entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_scalar_multiple_of_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j) {
        if ((*this)(i, i) != (*this)(0, 0)) return false;
      } else if (!(*this)(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

bool Mat::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool Mat::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Vec Mat::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Mat::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat& Mat::operator+=(const Mat& rhs) {
  require_same_shape(*this, rhs, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!rhs.data_[k].is_zero()) data_[k] += rhs.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  require_same_shape(*this, rhs, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!rhs.data_[k].is_zero()) data_[k] -= rhs.data_[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  if (s.is_one()) return *this;
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Mat Mat::operator-() const {
  Mat r(*this);
  for (auto& x : r.data_)
    if (!x.is_zero()) x = -x;
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) fused_add_mul(c(i, j), aik, b(k, j));
    }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) fused_add_mul(out[i], a(i, j), v[j]);
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec scaled(const Vec& v, const Scalar& s) {
  Vec r(v);
  for (auto& x : r)
    if (!x.is_zero()) x *= s;
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) fused_add_mul(s, a[i], b[i]);
  return s;
}

Mat bracket(const Mat& a, const Mat& b) {
  require_square_pair(a, b, "bracket");
  return a * b - b * a;
}

Mat jordan_product(const Mat& a, const Mat& b) {
  require_square_pair(a, b, "jordan_product");
  return a * b + b * a;
}

Mat triple_product(const Mat& a, const Mat& b, const Mat& c) { return bracket(a, bracket(b, c)); }

Mat kronecker(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Mat power(const Mat& a, std::size_t k) {
  if (!a.is_square()) throw DimensionError("power of non-square matrix");
  Mat result = Mat::identity(a.rows());
  Mat base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Scalar trace_of_product(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace_of_product: shape mismatch");
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) fused_add_mul(t, a(i, k), b(k, i));
  return t;
}

bool is_nilpotent_exact(const Mat& a) {
  if (!a.is_square()) throw DimensionError("is_nilpotent_exact: matrix is not square");
  // Repeated multiplication with an early exit; a^k = 0 for some k <= n iff nilpotent.
  Mat p = a;
  for (std::size_t k = 1; k < a.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return p.is_zero();
}

Vec flatten(const Mat& a) {
  if (!a.is_square()) throw DimensionError("flatten: matrix is not square");
  return a.data();
}

Mat unflatten(const Vec& v, std::size_t n) {
  if (v.size() != n * n)
    throw DimensionError("unflatten: length " + std::to_string(v.size()) + " is not " + std::to_string(n) + "^2");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

std::vector<std::size_t> rref_in_place(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref_in_place(m).size(); }

std::vector<Vec> kernel(const Mat& m) {
  Mat r = m;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (!r(k, free).is_zero()) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(Mat m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = Scalar(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Mat();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace gradelie
