#include "gradelie/subspace.hpp"

#include <algorithm>

#include "gradelie/error.hpp"

namespace gradelie {

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim);
    e[i] = Scalar(1);
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span_of(std::span<const Vec> vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::span_of_matrices(std::span<const Mat> mats, std::size_t n) {
  Subspace s(n * n);
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw DimensionError("span_of_matrices: matrix size mismatch");
    s.insert(flatten(m));
  }
  return s;
}

std::vector<Mat> Subspace::basis_matrices(std::size_t n) const {
  require_ambient(n * n, "basis_matrices");
  std::vector<Mat> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(unflatten(r, n));
  return out;
}

void Subspace::require_ambient(std::size_t n, const char* op) const {
  if (n != ambient_)
    throw DimensionError(std::string(op) + ": ambient dimension " + std::to_string(ambient_) + " vs " +
                         std::to_string(n));
}

Vec Subspace::reduce(const Vec& v) const {
  require_ambient(v.size(), "reduce");
  Vec r(v);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (r[p].is_zero()) continue;
    const Scalar f = r[p];
    const Vec& row = rows_[k];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!row[j].is_zero()) r[j] -= f * row[j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return gradelie::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_ambient(other.ambient_, "contains");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec Subspace::echelon_coordinates(const Vec& v) const {
  require_ambient(v.size(), "echelon_coordinates");
  Vec c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (lead == r.end()) return false;
  const auto p = static_cast<std::size_t>(lead - r.begin());
  const Scalar inv = Scalar(1) / r[p];
  for (std::size_t j = p; j < ambient_; ++j)
    if (!r[j].is_zero()) r[j] *= inv;
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar f = row[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

Subspace canonicalize(std::span<const Vec> vectors, std::size_t ambient_dim) {
  return Subspace::span_of(vectors, ambient_dim);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_sum: ambient mismatch");
  Subspace s = a;
  for (const auto& r : b.basis()) s.insert(r);
  return s;
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_intersect: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  // Solve Σ α_i a_i − Σ β_j b_j = 0; each kernel vector yields Σ α_i a_i in A ∩ B.
  std::vector<Vec> cols;
  cols.reserve(a.dim() + b.dim());
  for (const auto& r : a.basis()) cols.push_back(r);
  for (const auto& r : b.basis()) cols.push_back(scaled(r, Scalar(-1)));
  const Mat system = Mat::from_columns(cols, n);
  Subspace out(n);
  for (const auto& k : kernel(system)) {
    Vec x(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!k[i].is_zero())
        for (std::size_t j = 0; j < n; ++j) fused_add_mul(x[j], k[i], a.basis()[i][j]);
    out.insert(x);
  }
  return out;
}

bool subspace_contains(const Subspace& a, const Vec& v) { return a.contains(v); }

Subspace annihilator(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  if (s.is_zero()) return Subspace::full(n);
  const auto k = kernel(s.basis_rows());
  return Subspace::span_of(k, n);
}

}  // namespace gradelie
