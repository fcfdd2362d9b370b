#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gradelie/matrix.hpp"
#include "gradelie/subspace.hpp"

namespace gradelie {

/// Finite-dimensional Lie algebra of n×n matrices: a bracket-closed subspace
/// of gl(n) together with a distinguished basis.
///
/// At finite dimension Engel-type solvability (every quotient has a nonzero
/// Engel ideal) coincides with ordinary solvability, so only the latter is
/// modelled.
class LieAlgebra {
 public:
  /// Validates linear independence and bracket closure of `basis`.
  static LieAlgebra from_basis(std::vector<Mat> basis, std::size_t n);
  /// Lie algebra spanned by a bracket-closed subspace of flattened gl(n);
  /// the basis is the unflattened echelon basis.
  static LieAlgebra from_subspace(const Subspace& span, std::size_t n);
  static LieAlgebra zero(std::size_t n);

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Mat>& basis() const { return basis_; }
  [[nodiscard]] const Subspace& span() const { return span_; }

  [[nodiscard]] bool contains(const Mat& a) const { return span_.contains(flatten(a)); }
  /// Coordinates in the distinguished basis, or nullopt if `a` is outside.
  [[nodiscard]] std::optional<Vec> coordinates(const Mat& a) const;
  /// Σ coords[i] · basis[i].
  [[nodiscard]] Mat element(const Vec& coords) const;

 private:
  LieAlgebra(std::size_t n, std::vector<Mat> basis, Subspace span);
  friend LieAlgebra lie_closure(std::span<const Mat>, std::size_t, std::size_t);

  std::size_t n_ = 0;
  std::vector<Mat> basis_;
  Subspace span_;
  Mat to_basis_;  // echelon coordinates → basis coordinates
};

/// Smallest bracket-closed subspace containing `generators`. The basis lists
/// the independent generators first, then new brackets in discovery order.
/// `cap` bounds the dimension (0 means n²); exceeding it throws Error.
LieAlgebra lie_closure(std::span<const Mat> generators, std::size_t n, std::size_t cap = 0);
inline LieAlgebra lie_closure(const std::vector<Mat>& generators, std::size_t n, std::size_t cap = 0) {
  return lie_closure(std::span<const Mat>(generators), n, cap);
}

/// span{[a, b] : a ∈ A, b ∈ B} for subspaces of flattened gl(n).
Subspace commutator_subspace(const Subspace& a, const Subspace& b, std::size_t n);

/// Matrix of ad a = [a, ·] on L in L's basis; column j holds [a, b_j].
/// Throws NotNormalizingError if some [a, b_j] leaves L.
Mat ad_matrix(const LieAlgebra& lie, const Mat& a);
/// ad-matrices of the basis of V ⊆ L.
std::vector<Mat> ad_image(const LieAlgebra& lie, const Subspace& v);

enum class SeriesKind { kLowerCentral, kDerived };

struct SeriesReport {
  SeriesKind kind;
  /// Starts with L and ends with the first repeated term, so the last two
  /// entries are always equal.
  std::vector<Subspace> terms;
  bool stabilized = false;
  std::size_t terminal_dim = 0;

  [[nodiscard]] std::vector<std::size_t> dims() const;
};

SeriesReport derived_series(const LieAlgebra& lie);
SeriesReport lower_central_series(const LieAlgebra& lie);
bool is_solvable(const LieAlgebra& lie);
bool is_nilpotent_lie(const LieAlgebra& lie);
/// Every element ad-nilpotent; by Engel's theorem the same as nilpotency.
bool is_engel_algebra(const LieAlgebra& lie);

struct KillingGram {
  Mat gram;  // gram(i, j) = tr(ad b_i · ad b_j)
};
KillingGram killing_form(const LieAlgebra& lie);
/// ⟨x, y⟩ = tr(ad x · ad y) for x, y ∈ L.
Scalar killing_pairing(const LieAlgebra& lie, const Mat& x, const Mat& y);

/// tr(ab) = 0 for every a in a basis of [L, L] and b in a basis of L.
bool cartan_test(const LieAlgebra& lie);

bool is_engel_element(const LieAlgebra& lie, const Mat& a);

/// {x ∈ L : tr(x b) = 0 for all b ∈ L}; always an ideal.
Subspace trace_orthogonal_ideal(const LieAlgebra& lie);
/// {x ∈ L : ⟨x, L⟩ = 0} under the Killing form; a solvable ideal.
Subspace killing_orthogonal_ideal(const LieAlgebra& lie);
/// The solvable radical, computed as the Killing-orthogonal of [L, L].
Subspace solvable_radical(const LieAlgebra& lie);

/// Throws PreconditionError if `ideal` is not inside L.
bool is_ideal(const LieAlgebra& lie, const Subspace& ideal);
Subspace center(const LieAlgebra& lie);
/// V ⊆ span{identity}; V is a subspace of flattened gl(n).
bool is_scalar_set(const Subspace& v, std::size_t n);

/// For solvable L and Engel elements a, b of L, reports whether a + b is
/// Engel. Throws PreconditionError when the hypotheses fail.
bool engel_sum_check(const LieAlgebra& solvable, const Mat& a, const Mat& b);

}  // namespace gradelie
