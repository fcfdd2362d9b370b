#pragma once

#include <span>
#include <vector>

#include "gradelie/grading.hpp"
#include "gradelie/lie_algebra.hpp"

namespace gradelie {

/// A raw subspace of gl(n) with an independent basis; no closure assumed.
class MatSubspace {
 public:
  MatSubspace() = default;
  /// Keeps the independent members of `spanning` in order.
  MatSubspace(std::span<const Mat> spanning, std::size_t n);
  MatSubspace(const std::vector<Mat>& spanning, std::size_t n) : MatSubspace(std::span<const Mat>(spanning), n) {}
  MatSubspace(const Subspace& span, std::size_t n);

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Mat>& basis() const { return basis_; }
  [[nodiscard]] const Subspace& span() const { return span_; }
  [[nodiscard]] bool contains(const Mat& a) const { return span_.contains(flatten(a)); }

 private:
  std::size_t n_ = 0;
  std::vector<Mat> basis_;
  Subspace span_;
};

bool is_lie_triple_system(const MatSubspace& m);

/// A basis of span M^[k], where M^[1] = M and M^[k+1] = [M, M^[k]].
std::vector<Mat> m_bracket_powers(const MatSubspace& m, std::size_t k);
/// M^[n] ⊆ M. Throws PreconditionError for n < 2.
bool is_lie_n_product_system(const MatSubspace& m, std::size_t n);

/// L(M) = M + [M, M] for a Lie triple system M.
LieAlgebra triple_envelope(const MatSubspace& m);
/// Z₂-subgrading of L(M) with L₀ = [M, M] and L₁ = M; not necessarily direct.
SubgradedAlgebra triple_to_z2(const MatSubspace& m);

bool is_jordan_algebra(const MatSubspace& j);
/// J∘I ⊆ I. Throws PreconditionError if I ⊄ J.
bool is_jordan_ideal(const MatSubspace& j, const MatSubspace& i);
/// The Z₂-subgraded algebra [J, J] + J of a Jordan algebra.
SubgradedAlgebra jordan_to_z2(const MatSubspace& j);

/// L(I) ◁ L(J, I) ◁ L(J) with L(J, I) = I + [J, I].
struct JordanIdealChain {
  LieAlgebra li;
  LieAlgebra lji;
  LieAlgebra lj;
};
/// Throws PreconditionError if J is not a Jordan algebra or I not a Jordan
/// ideal, and InvariantViolation if an ideal inclusion fails.
JordanIdealChain jordan_ideal_chain(const MatSubspace& j, const MatSubspace& i);

}  // namespace gradelie
