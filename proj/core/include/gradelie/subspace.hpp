#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gradelie/matrix.hpp"

namespace gradelie {

/// Linear subspace of Q(i)^n held as its reduced row-echelon basis.
///
/// The basis is canonical: two subspaces are equal exactly when their basis
/// rows are identical, so `operator==` is syntactic.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  /// Throws DimensionError if any vector's length differs from `ambient_dim`.
  static Subspace span_of(std::span<const Vec> vectors, std::size_t ambient_dim);
  static Subspace span_of_matrices(std::span<const Mat> mats, std::size_t n);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] bool is_zero() const { return rows_.empty(); }
  [[nodiscard]] bool is_full() const { return rows_.size() == ambient_; }
  [[nodiscard]] const std::vector<Vec>& basis() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] Mat basis_rows() const { return Mat::from_rows(rows_, ambient_); }
  /// Basis rows unflattened as n×n matrices (ambient must be n²).
  [[nodiscard]] std::vector<Mat> basis_matrices(std::size_t n) const;

  /// Residual of `v` after elimination against the basis; zero iff v ∈ this.
  [[nodiscard]] Vec reduce(const Vec& v) const;
  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool contains(const Mat& m) const { return contains(flatten(m)); }
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of `v` in the echelon basis; only meaningful when v ∈ this.
  [[nodiscard]] Vec echelon_coordinates(const Vec& v) const;

  /// Inserts `v`, keeping the basis reduced. Returns false if v was already in the span.
  bool insert(const Vec& v);

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  void require_ambient(std::size_t n, const char* op) const;

  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// RREF span of `vectors`; idempotent and independent of input order.
Subspace canonicalize(std::span<const Vec> vectors, std::size_t ambient_dim);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vec& v);

/// {v : ⟨w, v⟩ = 0 for all w in s} under the bilinear pairing.
Subspace annihilator(const Subspace& s);

}  // namespace gradelie
